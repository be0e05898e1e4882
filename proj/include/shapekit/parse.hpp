#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "shapekit/reeb.hpp"
#include "shapekit/shape.hpp"

namespace shapekit {

// "E(a,b)", "B(c)", "Z(c)", "P(a,b)" with rational components
Domain4D parse_domain(std::string_view text);

// "E(a,b)" whose components may carry the formal e (written e or d), e.g. "E(3, 6+d)"
Ellipsoid parse_ellipsoid(std::string_view text);

// "X(arg, arg, ...)" -> ("X", args); whitespace ignored
std::pair<std::string, std::vector<std::string>> split_call(std::string_view text);

}  // namespace shapekit
