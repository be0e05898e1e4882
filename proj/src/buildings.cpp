#include "shapekit/buildings.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <tuple>

#include "shapekit/error.hpp"

namespace shapekit {

namespace {

struct Group {
  long m_i;
  int kappa;
  long count;
  long lmin;
};

auto key(const BuildingComponent& c) { return std::make_tuple(c.m_i, c.kappa, c.l_i, c.k_i); }

bool config_less(const BuildingConfig& x, const BuildingConfig& y) {
  return std::lexicographical_compare(x.components.begin(), x.components.end(), y.components.begin(),
                                      y.components.end(),
                                      [](const auto& u, const auto& v) { return key(u) > key(v); });
}

bool admissible(const FeasibilityProblem& p, AreaRule rule, long m_i, int kappa, long l) {
  BuildingComponent c{m_i, kappa, forced_k(p, m_i, kappa, l), l};
  PerturbedRational area = component_area(c, p);
  if (rule == AreaRule::PlaneAtLeastOne && c.is_plane()) return area >= PerturbedRational(1);
  return area > PerturbedRational(0);
}

// least l_i with admissible area; the area is base + l (x - 1) with x > 1
long least_l(const FeasibilityProblem& p, AreaRule rule, long m_i, int kappa) {
  BuildingComponent c0{m_i, kappa, forced_k(p, m_i, kappa, 0), 0};
  PerturbedRational base = component_area(c0, p);
  long l = (-base / PerturbedRational(p.x - 1)).floor() + 1;
  if (rule == AreaRule::PlaneAtLeastOne && m_i == 0 && kappa == 0) l = std::max(l, 0L);
  // the search starts here, so nothing below may be admissible
  if (!admissible(p, rule, m_i, kappa, l) || admissible(p, rule, m_i, kappa, l - 1))
    throw std::logic_error("l_i lower bound is not tight");
  return l;
}

void partitions(long n, long max_part, std::vector<long>& cur, const std::function<void(const std::vector<long>&)>& f) {
  if (n == 0) {
    f(cur);
    return;
  }
  for (long part = std::min(n, max_part); part >= 1; --part) {
    cur.push_back(part);
    partitions(n - part, part, cur, f);
    cur.pop_back();
  }
}

// every distribution of the top ends over non-plane components, planes filling up to T
void for_each_structure(const FeasibilityProblem& p, AreaRule rule, const std::function<void(std::vector<Group>&)>& f) {
  const long T = p.T();
  std::vector<long> cur;
  partitions(p.m, p.m, cur, [&](const std::vector<long>& parts) {
    std::vector<std::pair<long, int>> variants;  // (m_i carrying kappa, -1 for a separate component)
    if (p.scenario == Scenario::Full) {
      for (std::size_t i = 0; i < parts.size(); ++i)
        if (i == 0 || parts[i] != parts[i - 1]) variants.push_back({parts[i], 1});
      variants.push_back({-1, 1});
    } else {
      variants.push_back({0, 0});
    }
    for (auto [carrier, with_kappa] : variants) {
      std::vector<std::pair<long, int>> comps;
      bool placed = false;
      for (long part : parts) {
        int kap = (with_kappa && !placed && part == carrier) ? 1 : 0;
        if (kap) placed = true;
        comps.push_back({part, kap});
      }
      if (with_kappa && carrier == -1) comps.push_back({0, 1});
      long planes = T - static_cast<long>(comps.size());
      if (planes < 0) continue;
      std::vector<Group> groups;
      for (auto [mi, kap] : comps) {
        if (!groups.empty() && groups.back().m_i == mi && groups.back().kappa == kap)
          ++groups.back().count;
        else
          groups.push_back({mi, kap, 1, least_l(p, rule, mi, kap)});
      }
      if (planes > 0) groups.push_back({0, 0, planes, least_l(p, rule, 0, 0)});
      f(groups);
    }
  });
}

long abs_k_sum_at_zero(const FeasibilityProblem& p, const std::vector<Group>& groups) {
  long s = 0;
  for (const auto& g : groups) s += g.count * std::labs(forced_k(p, g.m_i, g.kappa, 0));
  return s;
}

}  // namespace

const char* scenario_name(Scenario s) { return s == Scenario::Full ? "Full" : "Hamiltonian"; }

const char* area_rule_name(AreaRule r) { return r == AreaRule::StrictPositive ? "StrictPositive" : "PlaneAtLeastOne"; }

long FeasibilityProblem::k() const { return ratio(b, a).floor(); }

long FeasibilityProblem::d() const { return scenario == Scenario::Full ? 2 * m + k() + 1 : (k() + 2) * m - 1; }

FeasibilityProblem make_problem(const Rational& a, long k, const Rational& x, long m, Scenario s) {
  FeasibilityProblem p;
  p.a = PerturbedRational(a);
  p.b = PerturbedRational(Rational(k) * a) + PerturbedRational::epsilon();
  p.x = x;
  p.m = m;
  p.scenario = s;
  validate(p);
  return p;
}

void validate(const FeasibilityProblem& p) {
  if (p.a <= PerturbedRational(0)) throw Error(ErrorCode::NonPositiveInput, "a must be positive", {{"a", p.a.str()}});
  if (p.m < 1) throw Error(ErrorCode::InvalidInput, "m must be positive", {{"m", std::to_string(p.m)}});
  if (!ratio(p.b, p.a).irrational_marked())
    throw Error(ErrorCode::DegenerateOrbit, "b/a must carry the perturbation", {{"a", p.a.str()}, {"b", p.b.str()}});
  if (p.k() < 2) throw Error(ErrorCode::InvalidInput, "floor(b/a) must be at least 2", {{"k", std::to_string(p.k())}});
  const Rational& x = p.x;
  if (p.scenario == Scenario::Full) {
    if (x < 1) throw Error(ErrorCode::InvalidInput, "x must be at least 1", {{"x", to_string(x)}});
    if (x == 1)
      throw Error(ErrorCode::InvalidInput, "x = 1 is decided by the closed-form predicate, not by enumeration",
                  {{"x", to_string(x)}});
    if (x < 2)
      throw Error(ErrorCode::XOutsideFundamentalDomain, "Full scenario needs x >= 2", {{"x", to_string(x)}});
  } else if (!(x > 1 && x < 2)) {
    throw Error(ErrorCode::XOutsideFundamentalDomain, "Hamiltonian scenario needs 1 < x < 2", {{"x", to_string(x)}});
  }
}

long forced_k(const FeasibilityProblem& p, long m_i, int kappa, long l_i) {
  const long k = p.k();
  if (p.scenario == Scenario::Full) return 1 - 2 * m_i - kappa * (k + 2) - l_i;
  return 1 - m_i * (k + 2) - l_i;
}

PerturbedRational component_area(const BuildingComponent& c, const FeasibilityProblem& p) {
  PerturbedRational tail = PerturbedRational(c.k_i) + PerturbedRational(Rational(c.l_i) * p.x);
  if (p.scenario == Scenario::Full)
    return PerturbedRational(c.m_i) * p.a + PerturbedRational(c.kappa) * p.b + tail;
  return PerturbedRational(c.m_i) * p.b + tail;
}

void canonicalize(BuildingConfig& c) {
  std::sort(c.components.begin(), c.components.end(), [](const auto& u, const auto& v) { return key(u) > key(v); });
}

bool config_feasible(const BuildingConfig& c, const FeasibilityProblem& p, AreaRule rule) {
  if (c.scenario != p.scenario || c.m != p.m || c.k != p.k()) return false;
  if (static_cast<long>(c.components.size()) != p.T()) return false;
  long sm = 0, skap = 0, sk = 0, sl = 0, sabs = 0;
  bool all_l_zero = true;
  for (const auto& comp : c.components) {
    if (comp.m_i < 0 || comp.kappa < 0 || comp.kappa > 1) return false;
    if (p.scenario == Scenario::Hamiltonian && comp.kappa != 0) return false;
    if (comp.k_i != forced_k(p, comp.m_i, comp.kappa, comp.l_i)) return false;
    PerturbedRational area = component_area(comp, p);
    if (rule == AreaRule::PlaneAtLeastOne && comp.is_plane()) {
      if (area < PerturbedRational(1)) return false;
    } else if (area <= PerturbedRational(0)) {
      return false;
    }
    sm += comp.m_i;
    skap += comp.kappa;
    sk += comp.k_i;
    sl += comp.l_i;
    sabs += std::labs(comp.k_i);
    if (comp.l_i != 0) all_l_zero = false;
  }
  if (sm != p.m || sk != 0 || sl != 0) return false;
  if (p.scenario == Scenario::Full && skap != 1) return false;
  if (all_l_zero && sabs < 2 * p.d()) return false;
  return true;
}

EnumerationResult enumerate_feasible(const FeasibilityProblem& p, AreaRule rule, const EnumerateOptions& opts) {
  validate(p);
  EnumerationResult res;
  const long two_d = 2 * p.d();

  for_each_structure(p, rule, [&](std::vector<Group>& groups) {
    if (res.budget_exceeded) return;
    long lsum = 0;
    for (const auto& g : groups) lsum += g.count * g.lmin;
    if (lsum > 0) return;
    const long R = -lsum;
    const long abs_zero = abs_k_sum_at_zero(p, groups);

    // excess over lmin, non-increasing within each group, total R
    std::vector<std::vector<long>> excess(groups.size());
    std::function<void(std::size_t, long, long)> rec = [&](std::size_t gi, long max_e, long remaining) {
      if (res.budget_exceeded) return;
      if (++res.nodes > opts.node_budget) {
        res.budget_exceeded = true;
        return;
      }
      if (gi == groups.size()) {
        if (remaining != 0) return;
        bool all_zero = true;
        BuildingConfig cfg{p.scenario, p.m, p.k(), {}};
        for (std::size_t g = 0; g < groups.size(); ++g)
          for (long e : excess[g]) {
            long l = groups[g].lmin + e;
            if (l != 0) all_zero = false;
            cfg.components.push_back({groups[g].m_i, groups[g].kappa, forced_k(p, groups[g].m_i, groups[g].kappa, l), l});
          }
        if (all_zero && abs_zero < two_d) return;
        canonicalize(cfg);
        if (!config_feasible(cfg, p, rule)) throw std::logic_error("enumerated building violates its constraints");
        ++res.count;
        if (res.configs.size() < opts.max_configs)
          res.configs.push_back(std::move(cfg));
        else
          res.truncated = true;
        return;
      }
      auto& ex = excess[gi];
      const long n = groups[gi].count;
      if (static_cast<long>(ex.size()) == n) {
        rec(gi + 1, remaining, remaining);
        return;
      }
      const long left = n - static_cast<long>(ex.size());
      if (gi + 1 == groups.size() && remaining > left * max_e) return;
      for (long e = std::min(max_e, remaining); e >= 0; --e) {
        ex.push_back(e);
        rec(gi, e, remaining - e);
        ex.pop_back();
        if (res.budget_exceeded) return;
      }
    };
    rec(0, R, R);
  });

  std::sort(res.configs.begin(), res.configs.end(), config_less);
  return res;
}

bool has_feasible_config(const FeasibilityProblem& p, AreaRule rule, std::uint64_t* structures_examined) {
  validate(p);
  const long two_d = 2 * p.d();
  bool found = false;
  std::uint64_t seen = 0;
  for_each_structure(p, rule, [&](std::vector<Group>& groups) {
    ++seen;
    if (found) return;
    long lsum = 0;
    bool all_zero = true;
    for (const auto& g : groups) {
      lsum += g.count * g.lmin;
      if (g.lmin != 0) all_zero = false;
    }
    if (lsum < 0 || (lsum == 0 && (!all_zero || abs_k_sum_at_zero(p, groups) >= two_d))) found = true;
  });
  if (structures_examined) *structures_examined = seen;
  return found;
}

ScanVerdict obstruction_scan(const Rational& a, long k, const Rational& x, Scenario s, long m_max, AreaRule rule) {
  if (m_max < 1) throw Error(ErrorCode::InvalidInput, "m_max must be positive", {{"m_max", std::to_string(m_max)}});
  ScanVerdict v;
  v.m_max = m_max;
  for (long m = 1; m <= m_max; ++m) {
    FeasibilityProblem p = make_problem(a, k, x, m, s);
    std::uint64_t seen = 0;
    if (!has_feasible_config(p, rule, &seen)) {
      v.obstructed = true;
      v.certificate = ScanCertificate{m, p.d(), p.T(), seen};
      return v;
    }
  }
  return v;
}

}  // namespace shapekit
