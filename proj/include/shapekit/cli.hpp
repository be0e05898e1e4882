#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "shapekit/error.hpp"

namespace shapekit {

// args exclude the program name. Exit status: 0 computed, 1 sweep failed,
// 2 invalid input, 3 indeterminate comparison, 4 search budget exceeded.
int exit_status(ErrorCode c);

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace shapekit
