#include "shapekit/shape.hpp"

#include <algorithm>
#include <stdexcept>

#include "shapekit/error.hpp"

namespace shapekit {

namespace {

void require_positive(const Rational& v, const char* name) {
  if (v <= 0) throw Error(ErrorCode::InvalidDomain, std::string(name) + " must be positive", {{name, to_string(v)}});
}

// leading coefficient scaled to +-1 so that equal half-planes compare equal
Constraint normalized(Constraint c) {
  Rational lead = c.alpha != 0 ? c.alpha : c.beta;
  if (lead == 0) throw std::logic_error("degenerate constraint");
  Rational s = abs(lead);
  c.alpha /= s;
  c.beta /= s;
  c.gamma /= s;
  return c;
}

Constraint lt(Rational a, Rational b, Rational g) { return normalized({a, b, g, true}); }
Constraint le(Rational a, Rational b, Rational g) { return normalized({a, b, g, false}); }

Rational mu_of(FundamentalDomain t) { return t == FundamentalDomain::FullShape ? 2 : 1; }

bool positive_quadrant(const AreaClass& p) { return p.w1 > 0 && p.w2 > 0; }

bool all_hold(const std::vector<Constraint>& cs, const AreaClass& p) {
  for (const auto& c : cs)
    if (!c.holds(p)) return false;
  return true;
}

Polygon closure_in_box(const std::vector<Constraint>& cs, const Rational& W) {
  Polygon poly = box_polygon(W, W);
  for (const auto& c : cs) {
    poly = clip(poly, c);
    if (poly.empty()) break;
  }
  return canonical(poly);
}

void add_cell(Region& r, std::vector<Constraint> cs, bool diag, const Rational& M) {
  Polygon poly = closure_in_box(cs, M);
  if (poly.empty()) return;
  AreaClass avg = vertex_average(poly);
  if (!positive_quadrant(avg) || !all_hold(cs, avg)) return;
  r.cells.push_back({std::move(cs), avg, diag});
}

Region build(const Domain4D& d, FundamentalDomain tag) {
  Region r;
  r.tag = tag;
  r.domain = d;
  r.provenance = (d.kind == DomainKind::Ball || d.kind == DomainKind::EllipsoidIntRatio) ? Provenance::Established
                                                                                         : Provenance::Reconstructed;
  r.profile = profile_of(d);
  const auto& pr = r.profile;

  std::vector<std::vector<Constraint>> base;
  base.push_back({lt(-1, 0, 0), lt(1, 0, pr.strip)});
  if (!pr.cap.empty()) {
    auto cap = pr.cap;
    cap.push_back(le(-1, 0, -pr.strip));
    base.push_back(cap);
  }

  Rational M = 4 * (pr.strip + pr.cap_width + pr.cap_height);
  if (tag == FundamentalDomain::FullShape) {
    for (const auto& b : base) {
      auto cs = b;
      cs.push_back(le(2, -1, 0));
      add_cell(r, cs, false, M);
    }
    for (const auto& b : base) {
      auto cs = b;
      cs.push_back(le(1, -1, 0));
      cs.push_back(le(-1, 1, 0));
      add_cell(r, cs, true, M);
    }
  } else {
    for (const auto& b : base) {
      auto cs = b;
      cs.push_back(le(1, -1, 0));
      add_cell(r, cs, false, M);
    }
  }
  if (r.cells.empty()) throw std::logic_error("region without cells");
  return r;
}

// sup of w1 along w2 = lam*w1 inside the cap constraints (all coefficients >= 0)
std::optional<Rational> cap_ray_sup(const ShapeProfile& p, const Rational& lam) {
  if (p.cap.empty()) return std::nullopt;
  std::optional<Rational> best;
  for (const auto& c : p.cap) {
    Rational den = c.alpha + c.beta * lam;
    if (den <= 0) throw std::logic_error("cap constraint is not bounding");
    Rational v = c.gamma / den;
    if (!best || v < *best) best = v;
  }
  return best;
}

void require_lambda(const Rational& lam) {
  if (lam < 1 || (lam > 1 && lam < 2))
    throw Error(ErrorCode::LambdaOutsideFundamentalDomain, "lambda must be 1 or at least 2", {{"lambda", to_string(lam)}});
}

// Integer form of a region's cells on the lattice w1 = s1*u, w2 = s2*v.
struct CompiledRegion {
  struct Lin {
    __int128 a, b, g;
    bool strict;
  };
  std::vector<std::vector<Lin>> cells;

  CompiledRegion(const Region& r, const Rational& s1, const Rational& s2) {
    for (const auto& cell : r.cells) {
      std::vector<Lin> out;
      for (const auto& c : cell.constraints) {
        Rational A = c.alpha * s1, B = c.beta * s2, G = c.gamma;
        mpz_class l;
        mpz_lcm(l.get_mpz_t(), A.get_den_mpz_t(), B.get_den_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), G.get_den_mpz_t());
        Rational Ai = A * l, Bi = B * l, Gi = G * l;
        auto fit = [](const Rational& v) -> __int128 {
          if (!v.get_num().fits_slong_p()) throw std::logic_error("sample lattice coefficient too large");
          return v.get_num().get_si();
        };
        out.push_back({fit(Ai), fit(Bi), fit(Gi), c.strict});
      }
      cells.push_back(std::move(out));
    }
  }

  bool contains(long u, long v) const {
    for (const auto& cell : cells) {
      bool ok = true;
      for (const auto& l : cell) {
        __int128 lhs = l.a * u + l.b * v;
        if (l.strict ? !(lhs < l.g) : !(lhs <= l.g)) {
          ok = false;
          break;
        }
      }
      if (ok) return true;
    }
    return false;
  }
};

std::size_t fibonacci_at_least(std::size_t n, std::size_t& prev) {
  std::size_t a = 1, b = 2;
  while (b < n) {
    std::size_t c = a + b;
    a = b;
    b = c;
  }
  prev = a;
  return b;
}

Rational max_of(std::initializer_list<Rational> xs) {
  Rational m = *xs.begin();
  for (const auto& x : xs)
    if (x > m) m = x;
  return m;
}

AreaClass checked_witness(const Region& x, const Region& y, const AreaClass& w) {
  if (!contains(x, w) || contains(y, w)) throw std::logic_error("inclusion witness failed verification");
  return w;
}

}  // namespace

long BasisChange::determinant() const {
  auto m = matrix();
  return m[0][0] * m[1][1] - m[0][1] * m[1][0];
}

AreaClass BasisChange::apply(const AreaClass& w) const {
  return {(a + 1) * w.w1 - a * w.w2, a * w.w1 + (1 - a) * w.w2};
}

std::pair<BasisChange, AreaClass> reduce_basis(const Rational& w1, const Rational& w2) {
  if (w1 <= 0 || w2 <= 0)
    throw Error(ErrorCode::NonPositiveInput, "areas must be positive", {{"w1", to_string(w1)}, {"w2", to_string(w2)}});
  if (w1 > w2)
    throw Error(ErrorCode::InvalidInput, "expected w1 <= w2", {{"w1", to_string(w1)}, {"w2", to_string(w2)}});
  BasisChange bc;
  if (w1 == w2) return {bc, {w1, w2}};
  bc.a = ceil_of(w1 / (w2 - w1)) - 1;
  AreaClass out = bc.apply({w1, w2});
  if (!(out.w1 > 0 && 2 * out.w1 <= out.w2)) throw std::logic_error("reduce_basis postcondition");
  return {bc, out};
}

Domain4D Domain4D::ball(const Rational& c) {
  require_positive(c, "c");
  return {DomainKind::Ball, c, 0};
}

Domain4D Domain4D::cylinder(const Rational& c) {
  require_positive(c, "c");
  return {DomainKind::Cylinder, c, 0};
}

Domain4D Domain4D::polydisk(const Rational& a, const Rational& b) {
  require_positive(a, "a");
  require_positive(b, "b");
  if (a > b) throw Error(ErrorCode::InvalidDomain, "expected a <= b", {{"a", to_string(a)}, {"b", to_string(b)}});
  return {DomainKind::Polydisk, a, b};
}

Domain4D Domain4D::ellipsoid(const Rational& a, const Rational& b) {
  require_positive(a, "a");
  require_positive(b, "b");
  Rational r = b / a;
  if (!is_integer(r) || r < 2)
    throw Error(ErrorCode::InvalidDomain, "b/a must be an integer >= 2", {{"a", to_string(a)}, {"b", to_string(b)}});
  return {DomainKind::EllipsoidIntRatio, a, b};
}

Domain4D Domain4D::scaled(const Rational& lambda) const {
  if (lambda <= 0) throw Error(ErrorCode::NonPositiveInput, "scale must be positive", {{"lambda", to_string(lambda)}});
  Domain4D d = *this;
  d.p *= lambda;
  d.q *= lambda;
  return d;
}

std::string Domain4D::str() const {
  switch (kind) {
    case DomainKind::Ball: return "B(" + to_string(p) + ")";
    case DomainKind::Cylinder: return "Z(" + to_string(p) + ")";
    case DomainKind::Polydisk: return "P(" + to_string(p) + ", " + to_string(q) + ")";
    case DomainKind::EllipsoidIntRatio: return "E(" + to_string(p) + ", " + to_string(q) + ")";
  }
  return "?";
}

const char* tag_name(FundamentalDomain t) {
  return t == FundamentalDomain::FullShape ? "FullShape" : "HamiltonianShape";
}

const char* provenance_name(Provenance p) { return p == Provenance::Established ? "established" : "reconstructed"; }

ShapeProfile profile_of(const Domain4D& d) {
  ShapeProfile p;
  switch (d.kind) {
    case DomainKind::EllipsoidIntRatio:
      p.strip = d.p / 2;
      p.cap = {lt(1 / d.p, 1 / d.q, 1)};
      p.cap_width = d.p;
      p.cap_height = d.q;
      break;
    case DomainKind::Ball:
      p.strip = d.p / 3;
      p.cap = {lt(1, 1, d.p)};
      p.cap_width = p.cap_height = d.p;
      break;
    case DomainKind::Polydisk:
      p.strip = d.p / 2;
      p.cap = {lt(1, 0, d.p), lt(0, 1, d.q)};
      p.cap_width = d.p;
      p.cap_height = d.q;
      break;
    case DomainKind::Cylinder:
      p.strip = d.p;
      break;
  }
  return p;
}

Region reduced_shape(const Domain4D& d) { return build(d, FundamentalDomain::FullShape); }

Region hamiltonian_shape(const Domain4D& d) {
  if (d.kind != DomainKind::EllipsoidIntRatio)
    throw Error(ErrorCode::InvalidDomain, "Hamiltonian shape is only available for integer-ratio ellipsoids",
                {{"domain", d.str()}});
  return build(d, FundamentalDomain::HamiltonianShape);
}

Region scaled(const Region& r, const Rational& lambda) {
  Region out = r;
  out.domain = r.domain.scaled(lambda);
  out.profile.strip *= lambda;
  out.profile.cap_width *= lambda;
  out.profile.cap_height *= lambda;
  for (auto& c : out.profile.cap) c = c.scaled(lambda);
  for (auto& cell : out.cells) {
    for (auto& c : cell.constraints) c = c.scaled(lambda);
    cell.interior = {cell.interior.w1 * lambda, cell.interior.w2 * lambda};
  }
  return out;
}

bool contains(const Region& r, const AreaClass& p) {
  if (!positive_quadrant(p)) return false;
  for (const auto& cell : r.cells)
    if (all_hold(cell.constraints, p)) return true;
  return false;
}

std::vector<Polygon> cell_polygons(const Region& r, const Rational& viewport) {
  std::vector<Polygon> out;
  for (const auto& cell : r.cells) {
    Polygon p = closure_in_box(cell.constraints, viewport);
    if (p.size() < 2) p.clear();
    out.push_back(std::move(p));
  }
  return out;
}

Rational diagonal_supremum(const ShapeProfile& p) {
  auto cap = cap_ray_sup(p, 1);
  return cap && *cap > p.strip ? *cap : p.strip;
}

SampleReport sample_difference(const Region& x, const Region& y, std::size_t min_points) {
  const Rational mu = mu_of(x.tag);
  const auto& px = x.profile;
  const auto& py = y.profile;
  Rational W1 = Rational(5, 4) * max_of({px.strip, py.strip, px.cap_width, py.cap_width, diagonal_supremum(px),
                                         diagonal_supremum(py)});
  Rational W2 = 2 * max_of({px.cap_height, py.cap_height, mu * W1});

  SampleReport rep;
  auto run = [&](const Rational& s1, const Rational& s2, auto&& gen, std::size_t count) {
    CompiledRegion cx(x, s1, s2), cy(y, s1, s2);
    for (std::size_t i = 0; i < count; ++i) {
      auto [u, v] = gen(i);
      ++rep.points;
      if (!rep.counterexample && cx.contains(u, v) && !cy.contains(u, v))
        rep.counterexample = AreaClass{s1 * u, s2 * v};
    }
  };

  std::size_t g = 0;
  std::size_t n = fibonacci_at_least(min_points, g);
  Rational two_n = Rational(2 * static_cast<long>(n));
  run(W1 / two_n, W2 / two_n,
      [&](std::size_t i) {
        return std::pair<long, long>(2 * static_cast<long>(i) + 1,
                                     2 * static_cast<long>((static_cast<unsigned __int128>(i) * g) % n) + 1);
      },
      n);

  const long line = 8192;
  Rational two_l = Rational(2 * line);
  auto odd = [](std::size_t i) { return std::pair<long, long>(2 * static_cast<long>(i) + 1, 2 * static_cast<long>(i) + 1); };
  run(W1 / two_l, W1 / two_l, odd, line);
  run(W1 / two_l, mu * W1 / two_l, odd, line);
  for (const Rational& s : {px.strip, py.strip})
    run(s, W2 / two_l, [](std::size_t j) { return std::pair<long, long>(1, 2 * static_cast<long>(j) + 1); }, line);
  return rep;
}

InclusionResult includes(const Region& x, const Region& y, const IncludeOptions& opts) {
  if (x.tag != y.tag)
    throw Error(ErrorCode::MixedFundamentalDomain, "regions use different fundamental domains",
                {{"x", tag_name(x.tag)}, {"y", tag_name(y.tag)}});
  const Rational mu = mu_of(x.tag);
  const auto& px = x.profile;
  const auto& py = y.profile;

  InclusionResult res;
  auto fail = [&](const AreaClass& w, const std::string& why) {
    res.included = false;
    res.witness = checked_witness(x, y, w);
    res.reason = why;
  };

  res.included = true;
  if (px.strip > py.strip) {
    Rational w1 = (px.strip + py.strip) / 2;
    fail({w1, max_of({mu * w1, py.cap_height}) + 1}, "strip of x is wider");
  } else if (x.tag == FundamentalDomain::FullShape && diagonal_supremum(px) > diagonal_supremum(py)) {
    Rational w = (diagonal_supremum(px) + diagonal_supremum(py)) / 2;
    fail({w, w}, "diagonal capacity of x is larger");
  } else if (!px.cap.empty()) {
    const Rational s = py.strip;
    const AreaClass c{s, mu * s};
    if (all_hold(px.cap, c)) {
      std::optional<AreaClass> w;
      for (const auto& g : py.cap)
        if (!g.holds(c)) w = c;
      if (py.cap.empty()) w = c;
      if (!w) {
        Rational M = 4 * (px.strip + px.cap_width + px.cap_height + py.strip + py.cap_width + py.cap_height);
        std::vector<Constraint> cut = px.cap;
        cut.push_back(le(-1, 0, -s));
        cut.push_back(le(mu, -1, 0));
        Polygon poly = closure_in_box(cut, M);
        for (const auto& v : poly) {
          bool in_a = all_hold(px.cap, v);
          for (const auto& g : py.cap) {
            Rational gv = g.lhs(v);
            if (in_a ? gv < g.gamma : gv <= g.gamma) continue;
            if (in_a) {
              w = v;
            } else {
              Rational gc = g.lhs(c);
              Rational t = std::min<Rational>(Rational(1, 2), (gv - g.gamma) / (gv - gc));
              w = AreaClass{v.w1 + t * (c.w1 - v.w1), v.w2 + t * (c.w2 - v.w2)};
            }
            break;
          }
          if (w) break;
        }
      }
      if (w) fail(*w, "cap of x leaves y beyond the strip of y");
    }
  }

  if (opts.cross_check) {
    SampleReport rep = sample_difference(x, y, opts.sample_points);
    res.sample_points = rep.points;
    if (rep.counterexample && !contains(y, *rep.counterexample) && res.included)
      throw std::logic_error("sampled point contradicts analytic inclusion: (" + to_string(rep.counterexample->w1) +
                             ", " + to_string(rep.counterexample->w2) + ")");
    res.sample_agrees = res.included == !rep.counterexample.has_value();
  }
  return res;
}

Rational capacity_lambda(const Domain4D& d, const Rational& lam) {
  require_lambda(lam);
  const Rational& a = d.p;
  const Rational& b = d.q;
  switch (d.kind) {
    case DomainKind::EllipsoidIntRatio: return lam * max_of({a / 2, a * b / (b + lam * a)});
    case DomainKind::Ball: return lam * max_of({a / 3, a / (1 + lam)});
    case DomainKind::Polydisk: return lam * max_of({a / 2, std::min<Rational>(a, b / lam)});
    case DomainKind::Cylinder: return lam * a;
  }
  throw std::logic_error("unknown domain kind");
}

Rational hamiltonian_capacity_lambda(const Domain4D& d, const Rational& lam) {
  if (d.kind != DomainKind::EllipsoidIntRatio)
    throw Error(ErrorCode::InvalidDomain, "Hamiltonian capacities are only available for integer-ratio ellipsoids",
                {{"domain", d.str()}});
  if (lam < 1) throw Error(ErrorCode::LambdaOutsideFundamentalDomain, "lambda must be at least 1", {{"lambda", to_string(lam)}});
  return lam * max_of({d.p / 2, d.p * d.q / (d.q + lam * d.p)});
}

bool embeds_L1x(const Rational& a, const Rational& b, const Rational& x, EmbedMode mode) {
  if (a <= 0 || b <= 0)
    throw Error(ErrorCode::NonPositiveInput, "a and b must be positive", {{"a", to_string(a)}, {"b", to_string(b)}});
  Rational r = b / a;
  if (!is_integer(r) || r < 2)
    throw Error(ErrorCode::NonIntegerRatio, "b/a must be an integer >= 2", {{"a", to_string(a)}, {"b", to_string(b)}});
  if (x < 1) throw Error(ErrorCode::InvalidInput, "x must be at least 1", {{"x", to_string(x)}});
  if (mode == EmbedMode::Full && x > 1 && x < 2)
    throw Error(ErrorCode::XOutsideFundamentalDomain, "x must be 1 or at least 2", {{"x", to_string(x)}});
  Rational bound = b * (1 - 1 / a);
  if (x == 1) return 1 < bound;
  return a > 2 || x < bound;
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::ObstructionFound: return "ObstructionFound";
    case Verdict::EmbeddingPossible: return "EmbeddingPossible";
    case Verdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

Thm13Result obstruction_check_thm13(const PolyPoly& k) {
  auto need = [](bool ok, const char* what) {
    if (!ok) throw Error(ErrorCode::HypothesisViolated, std::string("hypothesis failed: ") + what, {{"failed", what}});
  };
  need(k.a > 0 && k.b > 0 && k.c > 0 && k.d > 0, "positive parameters");
  need(k.a <= k.b, "a <= b");
  need(k.c <= k.d, "c <= d");
  need(k.b > k.d, "b > d");

  Region X = reduced_shape(Domain4D::polydisk(k.a, k.b));
  Region Y = reduced_shape(Domain4D::polydisk(k.c, k.d));
  InclusionResult inc = includes(X, Y);

  Thm13Result r;
  r.closed_form = k.c / k.a < 2;
  r.verdict = inc.included ? Verdict::Inconclusive : Verdict::ObstructionFound;
  r.witness = inc.witness;
  if (r.closed_form == inc.included) throw std::logic_error("polydisk verdict disagrees with c/a < 2");

  AreaClass pp{(k.c / 2 + k.a) / 2, (k.b + k.d) / 2};
  if (pp.w2 >= 2 * pp.w1 || pp.w2 == pp.w1) {
    r.proof_point = pp;
    r.proof_point_confirmed = contains(X, pp) && !contains(Y, pp);
  }
  return r;
}

Thm13Result obstruction_check_thm13(const PolyEll& k) {
  auto need = [](bool ok, const char* what) {
    if (!ok) throw Error(ErrorCode::HypothesisViolated, std::string("hypothesis failed: ") + what, {{"failed", what}});
  };
  need(k.a >= 2, "a >= 2");
  need(is_integer(k.b) && k.b >= 2, "b integer >= 2");
  need(k.c >= 1 && k.c <= 2, "1 <= c <= 2");

  Region X = reduced_shape(Domain4D::polydisk(1, k.a));
  Region Y = reduced_shape(Domain4D::ellipsoid(k.c, k.b * k.c));
  InclusionResult inc = includes(X, Y);

  Thm13Result r;
  r.closed_form = k.a + k.b <= k.b * k.c;
  r.witness = inc.witness;
  if (!inc.included)
    r.verdict = Verdict::ObstructionFound;
  else
    r.verdict = r.closed_form ? Verdict::EmbeddingPossible : Verdict::Inconclusive;
  return r;
}

}  // namespace shapekit
