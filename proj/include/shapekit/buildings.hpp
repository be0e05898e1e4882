#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "shapekit/exactnum.hpp"

namespace shapekit {

enum class Scenario { Full, Hamiltonian };
enum class AreaRule { StrictPositive, PlaneAtLeastOne };

const char* scenario_name(Scenario s);
const char* area_rule_name(AreaRule r);

struct BuildingComponent {
  long m_i = 0;
  int kappa = 0;  // Full scenario only
  long k_i = 0;
  long l_i = 0;

  bool is_plane() const { return m_i == 0 && kappa == 0; }
  friend bool operator==(const BuildingComponent&, const BuildingComponent&) = default;
};

struct BuildingConfig {
  Scenario scenario = Scenario::Full;
  long m = 0;
  long k = 0;
  std::vector<BuildingComponent> components;  // canonical: descending by (m_i, kappa, l_i, k_i)
  friend bool operator==(const BuildingConfig&, const BuildingConfig&) = default;
};

struct FeasibilityProblem {
  PerturbedRational a;
  PerturbedRational b;  // k a + e
  Rational x;
  long m = 1;
  Scenario scenario = Scenario::Full;

  long k() const;
  long d() const;  // 2m+k+1 or (k+2)m-1
  long T() const { return d() + 1; }
};

// b = k a + e; validates the scenario's range of x
FeasibilityProblem make_problem(const Rational& a, long k, const Rational& x, long m, Scenario s);
void validate(const FeasibilityProblem& p);

// k_i forced by the index relation
long forced_k(const FeasibilityProblem& p, long m_i, int kappa, long l_i);
PerturbedRational component_area(const BuildingComponent& c, const FeasibilityProblem& p);

void canonicalize(BuildingConfig& c);
// all constraints, independent of component order
bool config_feasible(const BuildingConfig& c, const FeasibilityProblem& p, AreaRule rule);

struct EnumerateOptions {
  std::size_t max_configs = 10000;
  std::uint64_t node_budget = 20000000;
};

struct EnumerationResult {
  std::vector<BuildingConfig> configs;  // canonical order
  std::uint64_t count = 0;              // all feasible configs seen, kept or not
  bool truncated = false;
  bool budget_exceeded = false;
  std::uint64_t nodes = 0;
};

EnumerationResult enumerate_feasible(const FeasibilityProblem& p, AreaRule rule, const EnumerateOptions& opts = {});

// decides emptiness without listing
bool has_feasible_config(const FeasibilityProblem& p, AreaRule rule, std::uint64_t* structures_examined = nullptr);

struct ScanCertificate {
  long m = 0;
  long d = 0;
  long T = 0;
  std::uint64_t structures = 0;  // top-end distributions ruled out
};

struct ScanVerdict {
  bool obstructed = false;
  long m_max = 0;
  std::optional<ScanCertificate> certificate;
};

ScanVerdict obstruction_scan(const Rational& a, long k, const Rational& x, Scenario s, long m_max,
                             AreaRule rule = AreaRule::PlaneAtLeastOne);

}  // namespace shapekit
