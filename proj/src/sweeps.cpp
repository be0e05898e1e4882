#include "shapekit/sweeps.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>

#include "shapekit/buildings.hpp"
#include "shapekit/ech.hpp"
#include "shapekit/error.hpp"
#include "shapekit/fredholm.hpp"
#include "shapekit/linf.hpp"
#include "shapekit/parse.hpp"
#include "shapekit/plot.hpp"
#include "shapekit/shape.hpp"

namespace shapekit {

namespace {

struct Outcome {
  bool passed = true;
  std::ostringstream detail;
  std::vector<std::string> warnings;
  std::size_t failures = 0;
  std::size_t checks = 0;

  void check(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    passed = false;
    if (failures++ < 5) detail << what << "; ";
  }
};

PerturbedRational eps() { return PerturbedRational::epsilon(); }

Ellipsoid ell(const PerturbedRational& a, const PerturbedRational& b) { return Ellipsoid(a, b); }

void ech_example(Outcome& o) {
  for (long k = 2; k <= 6; ++k) {
    Ellipsoid top = ell(1, PerturbedRational(k) + eps());
    Ellipsoid bot = ell(1, PerturbedRational(k + 1) + eps());
    OrbitSet s_top{0, 1}, s_bot{k + 1, 0};
    std::string K = "k=" + std::to_string(k);
    o.check(grading(top, s_top) == 2 * (1 + k), K + " grading(alpha2)");
    o.check(grading(bot, s_bot) == 2 * (k + 1), K + " grading(beta1^(k+1))");
    CurrentEnds ce{top, s_top, bot, s_bot, 0, 0, {{{Level::Top, OrbitKind::Long}, 1}, {{Level::Bottom, OrbitKind::Short}, 1}}};
    o.check(ech_index(ce) == 0, K + " ECH index");
    o.check(j0_index(ce) == 0, K + " J0");
    J0Bound b = j0_bound_check(ce);
    o.check(b.satisfied && b.slack == 0, K + " J0 slack " + std::to_string(b.slack));
  }
}

void rigid_degrees(Outcome& o) {
  for (long k = 2; k <= 10; ++k)
    for (long m = 1; m <= 20; ++m) {
      std::string at = " k=" + std::to_string(k) + " m=" + std::to_string(m);
      o.check(rigid_negative_degree(k, m, RigidFamily::MixedMs) == 2 * m + k + 1, "mixed" + at);
      o.check(rigid_negative_degree(k, m, RigidFamily::PureNs) == (k + 2) * m - 1, "pure" + at);
    }
}

void index_inequalities(Outcome& o) {
  Lemma41Report rep = lemma41_suite(2, 6, 30, 10);
  o.checks = rep.admissible;
  for (const auto& c : rep.failures) {
    o.passed = false;
    if (o.failures++ < 5)
      o.detail << "pattern " << c.pattern << " k=" << c.k << " m=" << c.m << " r=" << c.r << " ind=" << c.index
               << ": " << c.detail;
  }
  o.detail << rep.admissible << "/" << rep.cases << " admissible cases, " << rep.failures.size() << " failures; ";
}

Rational random_rational(std::mt19937_64& rng, long lo, long hi, long max_den) {
  std::uniform_int_distribution<long> den(1, max_den);
  long d = den(rng);
  std::uniform_int_distribution<long> num(lo * d, hi * d);
  Rational q(num(rng), d);
  q.canonicalize();
  return q;
}

void hermite(Outcome& o) {
  std::mt19937_64 rng(20240517);
  std::uniform_int_distribution<long> lam_dist(1, 20);
  std::uniform_int_distribution<int> pert(-1, 1);
  for (int n = 0; n < 10000; ++n) {
    Rational a0 = random_rational(rng, 0, 100, 1000);
    long lam = lam_dist(rng);
    int p = a0 > 0 ? pert(rng) : 0;  // stay inside [0, 100]
    if (a0 == 100 && p > 0) p = 0;
    PerturbedRational a = PerturbedRational(a0) + PerturbedRational(p) * eps();
    auto [f, c] = hermite_floor_gap(a, lam);
    o.check(f >= 0 && c >= -lam + 1, "a=" + a.str() + " lambda=" + std::to_string(lam));
  }
}

void basis_reduction(Outcome& o) {
  std::mt19937_64 rng(7340033);
  int done = 0;
  while (done < 10000) {
    Rational w1 = random_rational(rng, 0, 50, 97);
    Rational gap = random_rational(rng, 0, 20, 89);
    if (w1 <= 0 || gap <= 0 || w1 / gap > 100) continue;
    Rational w2 = w1 + gap;
    ++done;
    auto [bc, red] = reduce_basis(w1, w2);
    std::string at = "(" + to_string(w1) + ", " + to_string(w2) + ")";
    long hits = 0, found = 0;
    for (long a = -100; a <= 100; ++a) {
      BasisChange t{a};
      AreaClass v = t.apply({w1, w2});
      if (v.w1 > 0 && 2 * v.w1 <= v.w2) {
        ++hits;
        found = a;
      }
    }
    o.check(hits == 1 && found == bc.a, at + " brute force found " + std::to_string(hits) + " valid a");
    o.check(red.w1 > 0 && 2 * red.w1 <= red.w2, at + " output not reduced");
    o.check(bc.determinant() == 1, at + " determinant");
  }
}

void capacities(Outcome& o) {
  for (const Rational& a : {Rational(1), Rational(3, 2), Rational(2), Rational(3)})
    for (long r : {2, 3, 4}) {
      Rational b = a * r;
      Domain4D E = Domain4D::ellipsoid(a, b);
      o.check(capacity_lambda(E, 1) == a * b / (a + b), "c1 " + E.str());
      o.check(capacity_lambda(E, 2) == 2 * a * b / (2 * a + b), "c2 " + E.str());
    }
  for (const Rational& R : {Rational(1), Rational(2), Rational(7, 3)}) {
    o.check(capacity_lambda(Domain4D::ball(R), 1) == R / 2, "c1 B(" + to_string(R) + ")");
    o.check(capacity_lambda(Domain4D::cylinder(R), 1) == R, "c1 Z(" + to_string(R) + ")");
  }
}

void polydisk_ellipsoid(Outcome& o) {
  std::size_t mismatches = 0;
  std::ostringstream where;
  for (const Rational& c : {Rational(1), Rational(5, 4), Rational(3, 2), Rational(7, 4), Rational(2)})
    for (long b = 2; b <= 4; ++b)
      for (long twice_a = 4; twice_a <= 16; ++twice_a) {
        Rational a(twice_a, 2);
        a.canonicalize();
        Region X = reduced_shape(Domain4D::polydisk(1, a));
        Region Y = reduced_shape(Domain4D::ellipsoid(c, b * c));
        InclusionResult inc = includes(X, Y);
        bool expect = a + b <= b * c;
        std::string at = "a=" + to_string(a) + " b=" + std::to_string(b) + " c=" + to_string(c);
        if (inc.witness) o.check(contains(X, *inc.witness) && !contains(Y, *inc.witness), at + " witness");
        ++o.checks;
        if (inc.included != expect) {
          o.passed = false;
          if (mismatches++ < 3) where << at << (inc.included ? " included" : " not included") << "; ";
        }
      }
  if (mismatches)
    o.detail << mismatches << " of 195 grid points disagree with a+b <= bc, e.g. " << where.str();
}

void polydisk_polydisk(Outcome& o) {
  const std::vector<Rational> vals{Rational(1, 2), Rational(1), Rational(3, 2), Rational(2), Rational(3),
                                   Rational(4), Rational(6), Rational(10)};
  std::size_t cases = 0, proof_points = 0;
  for (const auto& a : vals)
    for (const auto& b : vals)
      for (const auto& c : vals)
        for (const auto& d : vals) {
          if (!(a <= b && c <= d && b > d)) continue;
          ++cases;
          Thm13Result r = obstruction_check_thm13(PolyPoly{a, b, c, d});
          std::string at = "P(" + to_string(a) + "," + to_string(b) + ") P(" + to_string(c) + "," + to_string(d) + ")";
          if (c / a < 2) {
            o.check(r.verdict == Verdict::ObstructionFound && r.witness.has_value(), at + " no obstruction");
            if (r.proof_point) {
              ++proof_points;
              o.check(r.proof_point_confirmed, at + " proof witness not in X \\ Y");
            }
          }
          if (r.witness) {
            Region X = reduced_shape(Domain4D::polydisk(a, b));
            Region Y = reduced_shape(Domain4D::polydisk(c, d));
            o.check(contains(X, *r.witness) && !contains(Y, *r.witness), at + " witness");
          }
        }
  o.detail << cases << " polydisk pairs, " << proof_points << " proof witnesses in the fundamental domain; ";
}

void linf_suite(Outcome& o) {
  for (long k = 2; k <= 8; ++k) {
    BetaGen g = psi1(k, k + 1);
    Rational c = phi2(g, g, true).coeff(2 * k + 3);
    o.check(c == (2 * k + 3) * (k * k + k) && c != 0, "pairing k=" + std::to_string(k));
  }
  Phi2Evaluator first(RewriteRule::FirstArgument), second(RewriteRule::SecondArgument);
  std::size_t pairs = 0;
  for (long i1 = 0; i1 <= 12; ++i1)
    for (long j1 = 0; i1 + j1 <= 12; ++j1)
      for (long i2 = 0; i1 + j1 + i2 <= 12; ++i2)
        for (long j2 = 0; i1 + j1 + i2 + j2 <= 12; ++j2) {
          if ((i1 == 0 && j1 == 0) || (i2 == 0 && j2 == 0)) continue;
          BetaGen g1{i1, j1}, g2{i2, j2};
          ++pairs;
          LinComb x = first(g1, g2);
          std::string at = "(" + std::to_string(i1) + "," + std::to_string(j1) + ")x(" + std::to_string(i2) + "," +
                           std::to_string(j2) + ")";
          o.check(x == first(g2, g1), at + " symmetry");
          o.check(x == second(g1, g2), at + " confluence");
        }
  o.detail << pairs << " generator pairs up to weight 12; ";
}

struct BuildingPoint {
  Rational a;
  long k;
  Rational x;
  Scenario s;
};

std::vector<BuildingPoint> building_grid() {
  std::vector<BuildingPoint> g;
  for (const Rational& a : {Rational(5, 4), Rational(3, 2), Rational(2), Rational(5, 2), Rational(3)})
    for (long k : {2, 3}) {
      for (long x : {2, 3, 5}) g.push_back({a, k, Rational(x), Scenario::Full});
      for (const Rational& x : {Rational(5, 4), Rational(3, 2), Rational(7, 4)}) g.push_back({a, k, x, Scenario::Hamiltonian});
    }
  return g;
}

std::string point_name(const BuildingPoint& p) {
  return std::string(scenario_name(p.s)) + " a=" + to_string(p.a) + " k=" + std::to_string(p.k) + " x=" + to_string(p.x);
}

void buildings_soundness(Outcome& o) {
  std::size_t obstructed = 0;
  for (const auto& p : building_grid()) {
    ScanVerdict v = obstruction_scan(p.a, p.k, p.x, p.s, 15);
    EmbedMode mode = p.s == Scenario::Full ? EmbedMode::Full : EmbedMode::Hamiltonian;
    bool embeds = embeds_L1x(p.a, p.k * p.a, p.x, mode);
    if (v.obstructed) {
      ++obstructed;
      o.check(!embeds, point_name(p) + " obstructed at m=" + std::to_string(v.certificate->m) + " but embeds");
    }
  }
  // x = 1 is decided by the predicate alone
  std::size_t diag = 0;
  for (const Rational& a : {Rational(5, 4), Rational(3, 2), Rational(2), Rational(5, 2), Rational(3)})
    for (long k : {2, 3}) {
      embeds_L1x(a, k * a, 1, EmbedMode::Full);
      ++diag;
    }
  o.detail << building_grid().size() << " grid points, " << obstructed << " obstructed, " << diag
           << " x=1 points by predicate; ";
}

void buildings_completeness(Outcome& o) {
  std::size_t needed = 0, found = 0;
  for (const auto& p : building_grid()) {
    EmbedMode mode = p.s == Scenario::Full ? EmbedMode::Full : EmbedMode::Hamiltonian;
    if (embeds_L1x(p.a, p.k * p.a, p.x, mode)) continue;
    ++needed;
    ScanVerdict v = obstruction_scan(p.a, p.k, p.x, p.s, 15);
    if (v.obstructed)
      ++found;
    else
      o.warnings.push_back(point_name(p) + ": no obstruction up to m=15");
  }
  o.checks = needed;
  o.detail << found << "/" << needed << " non-embedding points obstructed with m <= 15; ";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return {};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void plot_golden(Outcome& o, const SweepOptions& opts) {
  for (const auto& g : golden_plots()) {
    Region r = reduced_shape(parse_domain(g.domain));
    Rational W = parse_rational(g.viewport);
    std::string csv = read_file(opts.golden_dir + "/" + g.stem + ".csv");
    std::string svg = read_file(opts.golden_dir + "/" + g.stem + ".svg");
    o.check(!csv.empty() && csv == region_csv(r, W), g.stem + ".csv differs");
    o.check(!svg.empty() && svg == region_svg(r, W), g.stem + ".svg differs");
  }
}

struct Sweep {
  std::string name;
  double budget;
  std::function<void(Outcome&, const SweepOptions&)> body;
};

const std::vector<Sweep>& sweeps() {
  static const std::vector<Sweep> s{
      {"ech-example", 1, [](Outcome& o, const SweepOptions&) { ech_example(o); }},
      {"rigid-degrees", 1, [](Outcome& o, const SweepOptions&) { rigid_degrees(o); }},
      {"index-inequalities", 10, [](Outcome& o, const SweepOptions&) { index_inequalities(o); }},
      {"hermite", 1, [](Outcome& o, const SweepOptions&) { hermite(o); }},
      {"basis-reduction", 5, [](Outcome& o, const SweepOptions&) { basis_reduction(o); }},
      {"capacities", 1, [](Outcome& o, const SweepOptions&) { capacities(o); }},
      {"polydisk-ellipsoid", 30, [](Outcome& o, const SweepOptions&) { polydisk_ellipsoid(o); }},
      {"polydisk-polydisk", 30, [](Outcome& o, const SweepOptions&) { polydisk_polydisk(o); }},
      {"linf", 5, [](Outcome& o, const SweepOptions&) { linf_suite(o); }},
      {"buildings-soundness", 300, [](Outcome& o, const SweepOptions&) { buildings_soundness(o); }},
      {"buildings-completeness", 300, [](Outcome& o, const SweepOptions&) { buildings_completeness(o); }},
      {"plot-golden", 1, plot_golden},
  };
  return s;
}

}  // namespace

const std::vector<std::string>& sweep_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& s : sweeps()) n.push_back(s.name);
    return n;
  }();
  return names;
}

const std::vector<GoldenPlot>& golden_plots() {
  static const std::vector<GoldenPlot> g{
      {"E(2,4)", "4", "E_2_4"},
      {"B(1)", "1", "B_1"},
      {"P(1,2)", "3", "P_1_2"},
      {"Z(1)", "3", "Z_1"},
  };
  return g;
}

CriterionResult run_sweep(const std::string& name, const SweepOptions& opts) {
  const auto& all = sweeps();
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (all[i].name != name) continue;
    CriterionResult res;
    res.id = static_cast<int>(i) + 1;
    res.name = name;
    res.budget_seconds = all[i].budget;
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    try {
      all[i].body(o, opts);
    } catch (const std::exception& e) {
      o.passed = false;
      o.detail << "exception: " << e.what() << "; ";
    }
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (res.seconds > res.budget_seconds) {
      o.passed = false;
      o.detail << "took longer than the " << res.budget_seconds << " s budget; ";
    }
    res.passed = o.passed;
    std::string d = o.detail.str();
    if (d.size() >= 2 && d.compare(d.size() - 2, 2, "; ") == 0) d.resize(d.size() - 2);
    res.detail = std::to_string(o.checks) + " checks" + (d.empty() ? "" : "; " + d);
    res.warnings = std::move(o.warnings);
    return res;
  }
  throw Error(ErrorCode::InvalidInput, "unknown sweep '" + name + "'", {{"sweep", name}});
}

std::string format_result(const CriterionResult& r) {
  char secs[32];
  std::snprintf(secs, sizeof secs, "%.2f", r.seconds);
  std::string line = std::string(r.passed ? "PASS" : "FAIL") + " " + std::to_string(r.id) + " " + r.name + " (" +
                     secs + " s): " + r.detail;
  if (!r.warnings.empty()) line += " [" + std::to_string(r.warnings.size()) + " warning(s)]";
  return line;
}

}  // namespace shapekit
