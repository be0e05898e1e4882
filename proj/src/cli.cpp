#include "shapekit/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

#include "shapekit/buildings.hpp"
#include "shapekit/ech.hpp"
#include "shapekit/error.hpp"
#include "shapekit/fredholm.hpp"
#include "shapekit/linf.hpp"
#include "shapekit/parse.hpp"
#include "shapekit/plot.hpp"
#include "shapekit/shape.hpp"
#include "shapekit/sweeps.hpp"

#ifndef SHAPEKIT_GOLDEN_DIR
#define SHAPEKIT_GOLDEN_DIR "tests/golden"
#endif

namespace shapekit {

namespace {

using json = nlohmann::ordered_json;

// thrown by handlers that want a specific exit status without an error object
struct ExitWith {
  int status;
};

std::string qs(const Rational& q) { return to_string(q); }

json point_json(const AreaClass& p) { return json{{"w1", qs(p.w1)}, {"w2", qs(p.w2)}}; }

json emit(const json& inputs, const json& value) { return json{{"inputs", inputs}, {"value", value}}; }

OrbitSet orbit_set(const std::vector<long>& v, const std::string& what) {
  if (v.size() != 2 || v[0] < 0 || v[1] < 0)
    throw Error(ErrorCode::InvalidInput, what + " needs two non-negative multiplicities \"m1,m2\"");
  return {v[0], v[1]};
}

// "top:long=2"
std::pair<EndOrbit, long> parse_end(const std::string& s) {
  auto colon = s.find(':'), eq = s.find('=');
  if (colon == std::string::npos || eq == std::string::npos || eq < colon)
    throw Error(ErrorCode::ParseError, "expected LEVEL:KIND=COUNT", {{"input", s}});
  std::string lvl = s.substr(0, colon), kind = s.substr(colon + 1, eq - colon - 1);
  Level level;
  if (lvl == "top")
    level = Level::Top;
  else if (lvl == "bottom")
    level = Level::Bottom;
  else
    throw Error(ErrorCode::ParseError, "level must be top or bottom", {{"input", s}});
  long n = 0;
  try {
    n = std::stol(s.substr(eq + 1));
  } catch (const std::exception&) {
    throw Error(ErrorCode::ParseError, "bad end count", {{"input", s}});
  }
  if (n < 1) throw Error(ErrorCode::InvalidInput, "end counts must be positive", {{"input", s}});
  return {{level, parse_kind(kind)}, n};
}

template <class T>
T field(const json& j, const char* key) {
  if (!j.contains(key)) throw Error(ErrorCode::InvalidInput, std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InvalidInput, std::string("bad field '") + key + "': " + e.what());
  }
}

template <class T>
T field_or(const json& j, const char* key, T fallback) {
  return j.contains(key) ? field<T>(j, key) : fallback;
}

ReebOrbit orbit_from(const json& j) {
  return {parse_kind(field<std::string>(j, "kind")), field_or<long>(j, "multiplicity", 1)};
}

json fredholm_from_json(const json& req) {
  const std::string kind = field<std::string>(req, "kind");
  if (kind == "cobordism") {
    CurveAsymptotics ca{field_or<std::vector<long>>(req, "pos_short", {}), field_or<std::vector<long>>(req, "pos_long", {}),
                        field_or<std::vector<long>>(req, "neg_short", {}), field_or<std::vector<long>>(req, "neg_long", {})};
    return ind_cobordism(parse_ellipsoid(field<std::string>(req, "top")),
                         parse_ellipsoid(field<std::string>(req, "bottom")), ca);
  }
  if (kind == "symplectization")
    return ind_symplectization(parse_ellipsoid(field<std::string>(req, "ellipsoid")),
                               field_or<std::vector<long>>(req, "pos_short", {}),
                               field_or<std::vector<long>>(req, "pos_long", {}), orbit_from(field<json>(req, "neg")));
  if (kind == "mixed") {
    long k = field<long>(req, "k");
    if (field_or<bool>(req, "hamiltonian", false))
      return ind_mixed_component_hamiltonian(k, field<long>(req, "m_i"), field<long>(req, "k_i"), field<long>(req, "l_i"));
    MixedComponentEnds me{field<long>(req, "m_i"), field_or<int>(req, "kappa", 0), field<long>(req, "k_i"),
                          field<long>(req, "l_i")};
    return ind_mixed_component(k, me);
  }
  if (kind == "F0")
    return ind_F0(field<long>(req, "T"), field<long>(req, "d"), PerturbedRational::parse(field<std::string>(req, "S")));
  if (kind == "glue")
    return glue_index(field_or<std::vector<std::int64_t>>(req, "parts", {}), field_or<std::vector<int>>(req, "dims", {}));
  throw Error(ErrorCode::InvalidInput, "unknown fredholm kind '" + kind + "'",
              {{"kind", kind}, {"expected", "cobordism, symplectization, mixed, F0, glue"}});
}

json region_json(const Region& r, const Rational& viewport) {
  json cells = json::array();
  auto polys = cell_polygons(r, viewport);
  for (std::size_t i = 0; i < r.cells.size(); ++i) {
    json cs = json::array();
    for (const auto& c : r.cells[i].constraints)
      cs.push_back({{"alpha", qs(c.alpha)}, {"beta", qs(c.beta)}, {"op", c.strict ? "<" : "<="}, {"gamma", qs(c.gamma)}});
    json vs = json::array();
    for (const auto& v : polys[i]) vs.push_back(point_json(v));
    cells.push_back({{"constraints", cs}, {"interior", point_json(r.cells[i].interior)}, {"diagonal", r.cells[i].on_diagonal},
                     {"vertices", vs}});
  }
  return json{{"domain", r.domain.str()}, {"tag", tag_name(r.tag)}, {"provenance", provenance_name(r.provenance)},
              {"viewport", qs(viewport)}, {"cells", cells}};
}

json config_json(const BuildingConfig& c) {
  json comps = json::array();
  for (const auto& x : c.components)
    comps.push_back({{"m_i", x.m_i}, {"kappa", x.kappa}, {"k_i", x.k_i}, {"l_i", x.l_i}});
  return comps;
}

Scenario scenario_of(const std::string& s) {
  if (s == "full") return Scenario::Full;
  if (s == "hamiltonian") return Scenario::Hamiltonian;
  throw Error(ErrorCode::InvalidInput, "scenario must be full or hamiltonian", {{"scenario", s}});
}

AreaRule rule_of(const std::string& s) {
  if (s == "strict") return AreaRule::StrictPositive;
  if (s == "plane") return AreaRule::PlaneAtLeastOne;
  throw Error(ErrorCode::InvalidInput, "rule must be strict or plane", {{"rule", s}});
}

// b given as its rational part; the perturbation is added here
long ratio_k(const Rational& a, const Rational& b0) {
  if (a <= 0) throw Error(ErrorCode::NonPositiveInput, "a must be positive", {{"a", qs(a)}});
  Rational r = b0 / a;
  if (!is_integer(r) || r < 2)
    throw Error(ErrorCode::NonIntegerRatio, "b/a must be an integer >= 2", {{"a", qs(a)}, {"b", qs(b0)}});
  return floor_of(r);
}

json sweep_json(const CriterionResult& r) {
  return json{{"id", r.id},           {"name", r.name},         {"passed", r.passed},
              {"detail", r.detail},   {"warnings", r.warnings}, {"seconds", r.seconds},
              {"budget_seconds", r.budget_seconds}};
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::InvalidInput, "cannot write '" + path + "'", {{"path", path}});
  f << text;
}

json error_json(const std::string& code, const std::string& message, const Error::Context& ctx = {}) {
  json c = json::object();
  for (const auto& [k, v] : ctx) c[k] = v;
  return json{{"error", {{"code", code}, {"message", message}, {"context", c}}}};
}

}  // namespace

int exit_status(ErrorCode c) {
  switch (c) {
    case ErrorCode::IndeterminateComparison: return 3;
    case ErrorCode::SearchBudgetExceeded: return 4;
    default: return 2;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations for Lagrangian torus shape invariants and ellipsoid indices", "shapekit"};
  app.require_subcommand(1);
  std::function<json()> action;

  // ECH gradings and indices
  std::string ellipsoid_s, top_s, bottom_s, cap_s;
  long m1 = 0, m2 = 0, genus = 0, delta = 0;
  std::vector<long> top_orbits, bottom_orbits;
  std::vector<std::string> ends;

  auto* grading_cmd = app.add_subcommand("grading", "ECH grading of an orbit set");
  grading_cmd->add_option("--ellipsoid,-E", ellipsoid_s, "e.g. \"E(1,2+e)\"")->required();
  grading_cmd->add_option("--m1", m1, "short orbit multiplicity");
  grading_cmd->add_option("--m2", m2, "long orbit multiplicity");
  grading_cmd->callback([&] {
    action = [&] {
      Ellipsoid E = parse_ellipsoid(ellipsoid_s);
      return emit({{"ellipsoid", E.str()}, {"m1", m1}, {"m2", m2}}, grading(E, orbit_set({m1, m2}, "orbit set")));
    };
  });

  auto add_current = [&](CLI::App* c) {
    c->add_option("--top", top_s)->required();
    c->add_option("--top-orbits", top_orbits, "m1,m2")->delimiter(',')->required();
    c->add_option("--bottom", bottom_s)->required();
    c->add_option("--bottom-orbits", bottom_orbits, "n1,n2")->delimiter(',')->required();
    c->add_option("--genus", genus);
    c->add_option("--delta", delta);
    c->add_option("--ends", ends, "LEVEL:KIND=COUNT, default one end per orbit present");
  };
  auto current = [&] {
    OrbitSet t = orbit_set(top_orbits, "--top-orbits"), b = orbit_set(bottom_orbits, "--bottom-orbits");
    std::map<EndOrbit, long> per;
    if (ends.empty()) {
      if (t.m1) per[{Level::Top, OrbitKind::Short}] = 1;
      if (t.m2) per[{Level::Top, OrbitKind::Long}] = 1;
      if (b.m1) per[{Level::Bottom, OrbitKind::Short}] = 1;
      if (b.m2) per[{Level::Bottom, OrbitKind::Long}] = 1;
    }
    for (const auto& e : ends) per.insert(parse_end(e));
    if (genus < 0 || delta < 0) throw Error(ErrorCode::InvalidInput, "genus and delta must be non-negative");
    return CurrentEnds{parse_ellipsoid(top_s), t, parse_ellipsoid(bottom_s), b, genus, delta, per};
  };
  auto current_inputs = [&](const CurrentEnds& ce) {
    return json{{"top", ce.top_ellipsoid.str()}, {"top_orbits", {ce.top.m1, ce.top.m2}},
                {"bottom", ce.bottom_ellipsoid.str()}, {"bottom_orbits", {ce.bottom.m1, ce.bottom.m2}}};
  };

  auto* ech_cmd = app.add_subcommand("ech-index", "ECH index of a current between two ellipsoids");
  add_current(ech_cmd);
  ech_cmd->callback([&] {
    action = [&] {
      CurrentEnds ce = current();
      return emit(current_inputs(ce), ech_index(ce));
    };
  });

  auto* j0_cmd = app.add_subcommand("j0", "J0 index and the genus/ends bound");
  add_current(j0_cmd);
  j0_cmd->callback([&] {
    action = [&] {
      CurrentEnds ce = current();
      json in = current_inputs(ce);
      in["genus"] = genus;
      in["delta"] = delta;
      J0Bound b = j0_bound_check(ce);
      json r = emit(in, j0_index(ce));
      r["bound"] = {{"satisfied", b.satisfied}, {"slack", b.slack}};
      return r;
    };
  });

  auto* match_cmd = app.add_subcommand("grading-match", "orbit set of equal grading on the bottom ellipsoid");
  match_cmd->add_option("--top", top_s)->required();
  match_cmd->add_option("--top-orbits", top_orbits, "m1,m2")->delimiter(',')->required();
  match_cmd->add_option("--bottom", bottom_s)->required();
  match_cmd->add_option("--cap", cap_s, "action cap")->required();
  match_cmd->callback([&] {
    action = [&] {
      Ellipsoid T = parse_ellipsoid(top_s), B = parse_ellipsoid(bottom_s);
      OrbitSet t = orbit_set(top_orbits, "--top-orbits");
      PerturbedRational cap = PerturbedRational::parse(cap_s);
      OrbitSet r = grading_match(T, t, B, cap);
      return emit({{"top", T.str()}, {"top_orbits", {t.m1, t.m2}}, {"bottom", B.str()}, {"cap", cap.str()}},
                  json{{"m1", r.m1}, {"m2", r.m2}});
    };
  });

  // Fredholm indices
  std::string fred_json;
  auto* fred_cmd = app.add_subcommand("fredholm", "Fredholm index of a curve described in JSON");
  fred_cmd->add_option("--json", fred_json, "request object, or @file")->required();
  fred_cmd->callback([&] {
    action = [&] {
      std::string text = fred_json;
      if (!text.empty() && text[0] == '@') {
        std::ifstream f(text.substr(1));
        if (!f) throw Error(ErrorCode::InvalidInput, "cannot read '" + text.substr(1) + "'");
        std::ostringstream ss;
        ss << f.rdbuf();
        text = ss.str();
      }
      json req;
      try {
        req = json::parse(text);
      } catch (const json::exception& e) {
        throw Error(ErrorCode::ParseError, std::string("invalid JSON: ") + e.what());
      }
      return emit(req, fredholm_from_json(req));
    };
  });

  std::string family;
  long rk = 2, rm = 1;
  auto* rigid_cmd = app.add_subcommand("rigid-degree", "negative multiplicity of a rigid cobordism curve");
  rigid_cmd->add_option("--family", family, "mixed or pure")->required();
  rigid_cmd->add_option("--m", rm)->required();
  rigid_cmd->add_option("--k", rk)->required();
  rigid_cmd->callback([&] {
    action = [&] {
      RigidFamily f;
      if (family == "mixed")
        f = RigidFamily::MixedMs;
      else if (family == "pure")
        f = RigidFamily::PureNs;
      else
        throw Error(ErrorCode::InvalidInput, "family must be mixed or pure", {{"family", family}});
      return emit({{"family", family}, {"m", rm}, {"k", rk}}, rigid_negative_degree(rk, rm, f));
    };
  });

  long k_lo = 2, k_hi = 6, m_max = 30, r_max = 10;
  bool table = false;
  auto* l41_cmd = app.add_subcommand("lemma41-suite", "index inequalities for curves in the symplectization");
  l41_cmd->add_option("--k-lo", k_lo);
  l41_cmd->add_option("--k-hi", k_hi);
  l41_cmd->add_option("--m-max", m_max);
  l41_cmd->add_option("--r-max", r_max);
  l41_cmd->add_flag("--table", table, "human-readable table");
  l41_cmd->callback([&] {
    action = [&]() -> json {
      Lemma41Report rep = lemma41_suite(k_lo, k_hi, m_max, r_max);
      if (table) {
        std::ostringstream os;
        os << "pattern  k  min(ind - bound)\n";
        for (const auto& [key, ex] : rep.minimum_excess) os << "      " << key.first << "  " << key.second << "  " << ex << '\n';
        os << "cases " << rep.cases << ", admissible " << rep.admissible << ", equality " << rep.equality_cases.size()
           << ", failures " << rep.failures.size() << '\n';
        for (const auto& c : rep.failures)
          os << "FAIL pattern " << c.pattern << " k=" << c.k << " m=" << c.m << " r=" << c.r << " ind=" << c.index << ": "
             << c.detail << '\n';
        return os.str();
      }
      auto case_json = [](const Lemma41Case& c) {
        return json{{"pattern", c.pattern}, {"k", c.k}, {"m", c.m}, {"r", c.r}, {"index", c.index}, {"detail", c.detail}};
      };
      json fails = json::array(), eq = json::array(), mins = json::array();
      for (const auto& c : rep.failures) fails.push_back(case_json(c));
      for (const auto& c : rep.equality_cases) eq.push_back(case_json(c));
      for (const auto& [key, ex] : rep.minimum_excess) mins.push_back({{"pattern", key.first}, {"k", key.second}, {"excess", ex}});
      return emit({{"k_lo", k_lo}, {"k_hi", k_hi}, {"m_max", m_max}, {"r_max", r_max}},
                  {{"cases", rep.cases}, {"admissible", rep.admissible}, {"all_passed", rep.all_passed()},
                   {"failures", fails}, {"equality_cases", eq}, {"minimum_excess", mins}});
    };
  });

  // shape invariants
  auto* shape_cmd = app.add_subcommand("shape", "reduced shape regions")->require_subcommand(1);
  std::string dom_s, dom2_s, w1_s, w2_s, lambda_s, viewport_s = "4", svg_path, csv_path;
  std::vector<std::string> poly_poly, poly_ell;
  bool ham = false;
  std::size_t samples = 100000;
  auto region_of = [&](const std::string& s) {
    Domain4D d = parse_domain(s);
    return ham ? hamiltonian_shape(d) : reduced_shape(d);
  };

  auto* region_cmd = shape_cmd->add_subcommand("region", "cells and vertices of a region");
  region_cmd->add_option("domain", dom_s, "E(a,b), B(c), P(a,b) or Z(c)")->required();
  region_cmd->add_option("--viewport", viewport_s, "vertices are clipped to [0,W]^2");
  region_cmd->add_flag("--hamiltonian", ham);
  region_cmd->callback([&] {
    action = [&] {
      Region r = region_of(dom_s);
      return emit({{"domain", dom_s}, {"hamiltonian", ham}}, region_json(r, parse_rational(viewport_s)));
    };
  });

  auto* member_cmd = shape_cmd->add_subcommand("member", "is (w1,w2) in the region");
  member_cmd->add_option("domain", dom_s)->required();
  member_cmd->add_option("--w1", w1_s)->required();
  member_cmd->add_option("--w2", w2_s)->required();
  member_cmd->add_flag("--hamiltonian", ham);
  member_cmd->callback([&] {
    action = [&] {
      Region r = region_of(dom_s);
      AreaClass p{parse_rational(w1_s), parse_rational(w2_s)};
      json res = emit({{"domain", dom_s}, {"w1", qs(p.w1)}, {"w2", qs(p.w2)}, {"hamiltonian", ham}}, contains(r, p));
      res["provenance"] = provenance_name(r.provenance);
      return res;
    };
  });

  auto* inc_cmd = shape_cmd->add_subcommand("includes", "is the first region inside the second");
  inc_cmd->add_option("x", dom_s)->required();
  inc_cmd->add_option("y", dom2_s)->required();
  inc_cmd->add_flag("--hamiltonian", ham);
  inc_cmd->add_option("--samples", samples, "lattice points for the cross-check");
  inc_cmd->callback([&] {
    action = [&] {
      Region x = region_of(dom_s), y = region_of(dom2_s);
      InclusionResult r = includes(x, y, {true, samples});
      json v{{"included", r.included}};
      if (r.witness) v["witness"] = point_json(*r.witness);
      if (!r.reason.empty()) v["reason"] = r.reason;
      v["sample_points"] = r.sample_points;
      v["sample_agrees"] = r.sample_agrees;
      v["provenance"] = {provenance_name(x.provenance), provenance_name(y.provenance)};
      return emit({{"x", dom_s}, {"y", dom2_s}, {"hamiltonian", ham}}, v);
    };
  });

  auto* cap_cmd = shape_cmd->add_subcommand("capacity", "sup of w2 along w2 = lambda w1");
  cap_cmd->add_option("--domain", dom_s)->required();
  cap_cmd->add_option("--lambda", lambda_s)->required();
  cap_cmd->add_flag("--hamiltonian", ham);
  cap_cmd->callback([&] {
    action = [&] {
      Domain4D d = parse_domain(dom_s);
      Rational lam = parse_rational(lambda_s);
      Rational v = ham ? hamiltonian_capacity_lambda(d, lam) : capacity_lambda(d, lam);
      return emit({{"domain", dom_s}, {"lambda", qs(lam)}, {"hamiltonian", ham}}, qs(v));
    };
  });

  auto* rb_cmd = shape_cmd->add_subcommand("reduce-basis", "reduced Maslov-2 basis for an area class");
  rb_cmd->add_option("--w1", w1_s)->required();
  rb_cmd->add_option("--w2", w2_s)->required();
  rb_cmd->callback([&] {
    action = [&] {
      auto [bc, red] = reduce_basis(parse_rational(w1_s), parse_rational(w2_s));
      auto m = bc.matrix();
      return emit({{"w1", w1_s}, {"w2", w2_s}},
                  {{"a", bc.a}, {"matrix", {{m[0][0], m[0][1]}, {m[1][0], m[1][1]}}}, {"reduced", point_json(red)}});
    };
  });

  auto* ob_cmd = shape_cmd->add_subcommand("obstruct", "polydisk obstructions through shape inclusion");
  auto* pp_opt = ob_cmd->add_option("--poly-poly", poly_poly, "a,b,c,d for P(a,b) into P(c,d)")->delimiter(',')->expected(4);
  auto* pe_opt = ob_cmd->add_option("--poly-ell", poly_ell, "a,b,c for P(1,a) into E(c,bc)")->delimiter(',')->expected(3);
  pp_opt->excludes(pe_opt);
  ob_cmd->callback([&] {
    action = [&] {
      Thm13Result r;
      json in;
      if (!poly_poly.empty()) {
        PolyPoly k{parse_rational(poly_poly[0]), parse_rational(poly_poly[1]), parse_rational(poly_poly[2]),
                   parse_rational(poly_poly[3])};
        in = {{"case", "PolyPoly"}, {"a", qs(k.a)}, {"b", qs(k.b)}, {"c", qs(k.c)}, {"d", qs(k.d)}};
        r = obstruction_check_thm13(k);
      } else if (!poly_ell.empty()) {
        PolyEll k{parse_rational(poly_ell[0]), parse_rational(poly_ell[1]), parse_rational(poly_ell[2])};
        in = {{"case", "PolyEll"}, {"a", qs(k.a)}, {"b", qs(k.b)}, {"c", qs(k.c)}};
        r = obstruction_check_thm13(k);
      } else {
        throw Error(ErrorCode::InvalidInput, "pass --poly-poly or --poly-ell");
      }
      json v{{"verdict", verdict_name(r.verdict)}, {"closed_form", r.closed_form}};
      if (r.witness) v["witness"] = point_json(*r.witness);
      if (r.proof_point) {
        v["proof_point"] = point_json(*r.proof_point);
        v["proof_point_confirmed"] = r.proof_point_confirmed;
      }
      return emit(in, v);
    };
  });

  auto* plot_cmd = shape_cmd->add_subcommand("plot", "SVG or CSV picture of a region");
  plot_cmd->add_option("domain", dom_s)->required();
  plot_cmd->add_option("--viewport", viewport_s);
  plot_cmd->add_option("--svg", svg_path, "output path, - for stdout");
  plot_cmd->add_option("--csv", csv_path, "output path, - for stdout");
  plot_cmd->add_flag("--hamiltonian", ham);
  plot_cmd->callback([&] {
    action = [&]() -> json {
      Region r = region_of(dom_s);
      Rational W = parse_rational(viewport_s);
      if (svg_path.empty() && csv_path.empty()) return region_svg(r, W);
      if (!svg_path.empty()) write_text(svg_path, region_svg(r, W), out);
      if (!csv_path.empty()) write_text(csv_path, region_csv(r, W), out);
      if (svg_path == "-" || csv_path == "-") throw ExitWith{0};
      return emit({{"domain", dom_s}, {"viewport", qs(W)}}, json{{"svg", svg_path}, {"csv", csv_path}});
    };
  });

  // buildings
  auto* bld_cmd = app.add_subcommand("buildings", "top-level building configurations")->require_subcommand(1);
  std::string a_s, b_s, x_s, scenario_s = "full", rule_s = "plane";
  long bm = 1, bm_max = 15;
  std::size_t max_configs = 10000;
  std::uint64_t node_budget = EnumerateOptions{}.node_budget;
  auto add_problem = [&](CLI::App* c) {
    c->add_option("--a", a_s)->required();
    c->add_option("--b-delta", b_s, "rational part of b; b = this + delta")->required();
    c->add_option("--x", x_s)->required();
    c->add_option("--scenario", scenario_s, "full or hamiltonian");
    c->add_option("--rule", rule_s, "strict or plane");
  };
  auto problem_inputs = [&](const Rational& a, const Rational& b0, const Rational& x) {
    return json{{"a", qs(a)}, {"b", qs(b0) + " + d"}, {"x", qs(x)}, {"scenario", scenario_s}, {"rule", rule_s}};
  };

  auto* en_cmd = bld_cmd->add_subcommand("enumerate", "list feasible configurations");
  add_problem(en_cmd);
  en_cmd->add_option("--m", bm)->required();
  en_cmd->add_option("--max-configs", max_configs);
  en_cmd->add_option("--node-budget", node_budget, "search nodes before giving up (exit 4)");
  en_cmd->callback([&] {
    action = [&] {
      Rational a = parse_rational(a_s), b0 = parse_rational(b_s), x = parse_rational(x_s);
      FeasibilityProblem p = make_problem(a, ratio_k(a, b0), x, bm, scenario_of(scenario_s));
      EnumerateOptions opts;
      opts.max_configs = max_configs;
      opts.node_budget = node_budget;
      EnumerationResult r = enumerate_feasible(p, rule_of(rule_s), opts);
      if (r.budget_exceeded)
        throw Error(ErrorCode::SearchBudgetExceeded, "node budget exhausted; partial results only",
                    {{"nodes", std::to_string(r.nodes)}, {"configs_seen", std::to_string(r.count)}});
      json in = problem_inputs(a, b0, x);
      in["m"] = bm;
      json cfgs = json::array();
      for (const auto& c : r.configs) cfgs.push_back(config_json(c));
      return emit(in, {{"k", p.k()}, {"d", p.d()}, {"T", p.T()}, {"count", r.count}, {"truncated", r.truncated},
                       {"configs", cfgs}});
    };
  });

  auto* scan_cmd = bld_cmd->add_subcommand("scan", "least m without a feasible configuration");
  add_problem(scan_cmd);
  scan_cmd->add_option("--m-max", bm_max);
  scan_cmd->callback([&] {
    action = [&] {
      Rational a = parse_rational(a_s), b0 = parse_rational(b_s), x = parse_rational(x_s);
      ScanVerdict v = obstruction_scan(a, ratio_k(a, b0), x, scenario_of(scenario_s), bm_max, rule_of(rule_s));
      json in = problem_inputs(a, b0, x);
      in["m_max"] = bm_max;
      json val;
      if (v.obstructed) {
        const auto& c = *v.certificate;
        val = {{"verdict", "ObstructedAt"},
               {"m", c.m},
               {"certificate", {{"m", c.m}, {"d", c.d}, {"T", c.T}, {"structures_examined", c.structures}}}};
      } else {
        val = {{"verdict", "NoObstructionUpTo"}, {"m", v.m_max}};
      }
      return emit(in, val);
    };
  });

  // L-infinity coefficients
  auto* linf_cmd = app.add_subcommand("linf", "L-infinity coefficients")->require_subcommand(1);
  long lk = 2, i1 = 0, j1 = 0, i2 = 0, j2 = 0;
  std::string rule_name = "first";
  auto* pair_cmd = linf_cmd->add_subcommand("pairing", "pairing coefficient through the recursion");
  pair_cmd->add_option("--k", lk)->required();
  pair_cmd->callback([&] { action = [&] { return emit({{"k", lk}}, qs(pairing_coefficient(lk))); }; });
  auto* phi2_cmd = linf_cmd->add_subcommand("phi2", "phi2 of two beta generators, large S");
  phi2_cmd->add_option("--i1", i1)->required();
  phi2_cmd->add_option("--j1", j1)->required();
  phi2_cmd->add_option("--i2", i2)->required();
  phi2_cmd->add_option("--j2", j2)->required();
  phi2_cmd->add_option("--rule", rule_name, "first or second");
  phi2_cmd->callback([&] {
    action = [&] {
      RewriteRule rule;
      if (rule_name == "first")
        rule = RewriteRule::FirstArgument;
      else if (rule_name == "second")
        rule = RewriteRule::SecondArgument;
      else
        throw Error(ErrorCode::InvalidInput, "rule must be first or second", {{"rule", rule_name}});
      Phi2Evaluator ev(rule);
      LinComb v = ev(beta(i1, j1), beta(i2, j2));
      json terms = json::array();
      for (const auto& [q, c] : v.terms()) terms.push_back({{"q", q}, {"coeff", qs(c)}});
      json r = emit({{"i1", i1}, {"j1", j1}, {"i2", i2}, {"j2", j2}, {"rule", rule_name}}, json{{"terms", terms}});
      r["terms"] = terms;
      return r;
    };
  });

  // acceptance sweeps
  std::string sweep_name, golden_dir = SHAPEKIT_GOLDEN_DIR;
  auto* sweep_cmd = app.add_subcommand("sweep", "run an acceptance sweep; exits 1 if it fails");
  sweep_cmd->add_option("name", sweep_name, "sweep name or all")->required();
  sweep_cmd->add_option("--golden-dir", golden_dir);
  sweep_cmd->add_flag("--table", table);
  sweep_cmd->callback([&] {
    action = [&]() -> json {
      std::vector<std::string> names;
      if (sweep_name == "all")
        names = sweep_names();
      else
        names.push_back(sweep_name);
      SweepOptions opts{golden_dir};
      json results = json::array();
      std::string lines;
      bool ok = true;
      for (const auto& n : names) {
        CriterionResult r = run_sweep(n, opts);
        ok = ok && r.passed;
        results.push_back(sweep_json(r));
        lines += format_result(r) + "\n";
        for (const auto& w : r.warnings) lines += "  warning: " + w + "\n";
      }
      if (table)
        out << lines;
      else
        out << (names.size() == 1 ? results[0] : results).dump(2) << '\n';
      throw ExitWith{ok ? 0 : 1};
    };
  });

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    out << error_json("InvalidInput", e.what()).dump(2) << '\n';
    return 2;
  }

  try {
    json r = action();
    if (r.is_string())
      out << r.get<std::string>();
    else
      out << r.dump(2) << '\n';
    return 0;
  } catch (const ExitWith& e) {
    return e.status;
  } catch (const Error& e) {
    out << error_json(code_name(e.code()), e.what(), e.context()).dump(2) << '\n';
    return exit_status(e.code());
  } catch (const std::logic_error& e) {
    out << error_json("InternalError", e.what()).dump(2) << '\n';
    err << "internal error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace shapekit
