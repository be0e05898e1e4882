#pragma once

#include <string>
#include <vector>

namespace shapekit {

struct SweepOptions {
  std::string golden_dir;  // where the plot golden files live
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  std::vector<std::string> warnings;
  double seconds = 0;
  double budget_seconds = 0;
};

// names in criterion order
const std::vector<std::string>& sweep_names();

CriterionResult run_sweep(const std::string& name, const SweepOptions& opts);

// one line: "PASS 3 lemma41 ..." / "FAIL ..."
std::string format_result(const CriterionResult& r);

// golden plot viewports: (domain literal, viewport literal, file stem)
struct GoldenPlot {
  std::string domain;
  std::string viewport;
  std::string stem;
};
const std::vector<GoldenPlot>& golden_plots();

}  // namespace shapekit
