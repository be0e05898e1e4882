#include <iostream>
#include <string>
#include <vector>

#include "shapekit/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return shapekit::run(args, std::cout, std::cerr);
}
