#include <iostream>

#include "shapekit/sweeps.hpp"

int main(int argc, char** argv) {
  shapekit::SweepOptions opts{argc > 1 ? argv[1] : SHAPEKIT_GOLDEN_DIR};
  int failed = 0;
  for (const auto& name : shapekit::sweep_names()) {
    auto r = shapekit::run_sweep(name, opts);
    std::cout << shapekit::format_result(r) << std::endl;
    for (const auto& w : r.warnings) std::cout << "  warning: " << w << '\n';
    if (!r.passed) ++failed;
  }
  std::cout << (shapekit::sweep_names().size() - failed) << "/" << shapekit::sweep_names().size()
            << " criteria passed" << std::endl;
  return failed ? 1 : 0;
}
