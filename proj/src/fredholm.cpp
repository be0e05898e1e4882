#include "shapekit/fredholm.hpp"

#include <sstream>

#include "shapekit/error.hpp"

namespace shapekit {

namespace {

void check_multiplicities(const std::vector<long>& v) {
  for (long x : v)
    if (x < 1) throw Error(ErrorCode::InvalidInput, "end multiplicities must be >= 1");
}

// sum (x + floor(x r))
std::int64_t shifted_floor_sum(const std::vector<long>& xs, const PerturbedRational& r) {
  std::int64_t s = 0;
  for (long x : xs) s += x + (PerturbedRational(x) * r).floor();
  return s;
}

std::int64_t floor_sum(const std::vector<long>& xs, const PerturbedRational& r) {
  std::int64_t s = 0;
  for (long x : xs) s += (PerturbedRational(x) * r).floor();
  return s;
}

std::int64_t as_integer(const Rational& q) {
  if (!is_integer(q)) throw std::logic_error("index formula produced a non-integer");
  return floor_of(q);
}

Ellipsoid standard_ellipsoid(long k) {
  return Ellipsoid(PerturbedRational(1), PerturbedRational(k) + PerturbedRational::epsilon());
}

}  // namespace

Rational fredholm_index(const std::vector<EndDatum>& positive, const std::vector<EndDatum>& negative,
                        const Rational& chern) {
  Rational ind = Rational(static_cast<long>(positive.size() + negative.size())) - 2 + 2 * chern;
  for (const auto& e : positive) ind += e.cz + Rational(e.morse_bott_dim) / 2;
  for (const auto& e : negative) ind -= e.cz - Rational(e.morse_bott_dim) / 2;
  return ind;
}

std::int64_t ind_cobordism(const Ellipsoid& top, const Ellipsoid& bottom, const CurveAsymptotics& ca) {
  if (ca.pos_short.empty() && ca.pos_long.empty() && ca.neg_short.empty() && ca.neg_long.empty())
    throw Error(ErrorCode::EmptyAsymptotics, "curve has no ends");
  require_nondegenerate(top);
  require_nondegenerate(bottom);
  check_multiplicities(ca.pos_short);
  check_multiplicities(ca.pos_long);
  check_multiplicities(ca.neg_short);
  check_multiplicities(ca.neg_long);
  const std::int64_t n1 = ca.pos_short.size(), n2 = ca.pos_long.size();
  std::int64_t ind = 2 * n1 + 2 * n2 - 2;
  ind += 2 * shifted_floor_sum(ca.pos_short, ratio(top.a(), top.b()));
  ind += 2 * shifted_floor_sum(ca.pos_long, top.ratio());
  ind -= 2 * shifted_floor_sum(ca.neg_short, ratio(bottom.a(), bottom.b()));
  ind -= 2 * shifted_floor_sum(ca.neg_long, bottom.ratio());
  return ind;
}

std::int64_t ind_symplectization(const Ellipsoid& E, const std::vector<long>& pos_short,
                                 const std::vector<long>& pos_long, const ReebOrbit& neg) {
  check_multiplicities(pos_short);
  check_multiplicities(pos_long);
  std::vector<EndDatum> pos, negs;
  for (long r : pos_short) pos.push_back({Rational(cz_ellipsoid(E, {OrbitKind::Short, r})), 0});
  for (long s : pos_long) pos.push_back({Rational(cz_ellipsoid(E, {OrbitKind::Long, s})), 0});
  negs.push_back({Rational(cz_ellipsoid(E, neg)), 0});
  return as_integer(fredholm_index(pos, negs));
}

std::int64_t ind_mixed_component(long k, long short_ends, long long_ends, long k_i, long l_i) {
  if (k < 2) throw Error(ErrorCode::InvalidInput, "k must be >= 2");
  if (short_ends < 0 || long_ends < 0) throw Error(ErrorCode::InvalidInput, "end counts must be >= 0");
  const Ellipsoid E = standard_ellipsoid(k);
  std::vector<EndDatum> pos;
  const Rational cz1(cz_ellipsoid(E, {OrbitKind::Short, 1}));
  const Rational cz2(cz_ellipsoid(E, {OrbitKind::Long, 1}));
  for (long i = 0; i < short_ends; ++i) pos.push_back({cz1, 0});
  for (long i = 0; i < long_ends; ++i) pos.push_back({cz2, 0});
  // negative end gamma_(-k_i,-l_i) in the ambient trivialization
  std::vector<EndDatum> neg{{Rational(2 * (-k_i - l_i)) + Rational(1, 2), 1}};
  return as_integer(fredholm_index(pos, neg));
}

std::int64_t ind_mixed_component(long k, const MixedComponentEnds& me) {
  if (me.kappa != 0 && me.kappa != 1) throw Error(ErrorCode::InvalidInput, "kappa must be 0 or 1");
  return ind_mixed_component(k, me.m_i, me.kappa, me.k_i, me.l_i);
}

std::int64_t ind_mixed_component_hamiltonian(long k, long m_i, long k_i, long l_i) {
  return ind_mixed_component(k, 0, m_i, k_i, l_i);
}

std::int64_t ind_F0(long T, long d, const PerturbedRational& S) {
  if (T < 1 || d < 1) throw Error(ErrorCode::InvalidInput, "T and d must be positive");
  if (S <= PerturbedRational(d))
    throw Error(ErrorCode::SNotLargeEnough, "S must exceed d", {{"S", S.str()}, {"d", std::to_string(d)}});
  const Ellipsoid bottom(PerturbedRational(1), S);
  // T interior cosphere ends of dimension 1 on top, beta_1^d at the bottom
  std::vector<EndDatum> pos(T, EndDatum{cz_cosphere({1, 0, Trivialization::Interior}).cz, 1});
  std::vector<EndDatum> neg{{Rational(cz_ellipsoid(bottom, {OrbitKind::Short, d})), 0}};
  return as_integer(fredholm_index(pos, neg));
}

std::int64_t glue_index(const std::vector<std::int64_t>& parts, const std::vector<int>& matched_dims) {
  std::int64_t s = 0;
  for (auto p : parts) s += p;
  for (int d : matched_dims) {
    if (d != 0 && d != 1) throw Error(ErrorCode::InvalidInput, "matched Morse-Bott dimensions must be 0 or 1");
    s -= d;
  }
  return s;
}

long rigid_degree_closed_form(long k, long m, RigidFamily family) {
  return family == RigidFamily::MixedMs ? 2 * m + k + 1 : (k + 2) * m - 1;
}

long rigid_negative_degree(long k, long m, RigidFamily family) {
  if (k < 2 || m < 1) throw Error(ErrorCode::InvalidInput, "need k >= 2 and m >= 1");
  const Ellipsoid top = standard_ellipsoid(k);
  CurveAsymptotics ca;
  if (family == RigidFamily::MixedMs) {
    ca.pos_short.assign(m, 1);
    ca.pos_long.assign(1, 1);
  } else {
    ca.pos_long.assign(m, 1);
  }
  // with the bottom E(1, t+1+e) we have t < S, so the index is C - 2t; solve from t = 1 and check
  auto index_at = [&](long t) {
    const Ellipsoid bottom(PerturbedRational(1), PerturbedRational(t + 1) + PerturbedRational::epsilon());
    ca.neg_short.assign(1, t);
    return ind_cobordism(top, bottom, ca);
  };
  const std::int64_t i1 = index_at(1), i2 = index_at(2);
  if (i1 - i2 != 2) throw std::logic_error("index is not linear in the negative multiplicity");
  if (i1 < 0 || i1 % 2 != 0) throw std::logic_error("no rigid negative degree");
  const long t = 1 + static_cast<long>(i1 / 2);
  if (index_at(t) != 0) throw std::logic_error("solved degree is not rigid");
  if (t != rigid_degree_closed_form(k, m, family)) throw std::logic_error("rigid degree disagrees with its closed form");
  return t;
}

PerturbedRational action_difference(const Ellipsoid& E, const std::vector<long>& pos_short,
                                    const std::vector<long>& pos_long, const ReebOrbit& neg) {
  PerturbedRational d;
  for (long r : pos_short) d = d + action(E, {OrbitKind::Short, r});
  for (long s : pos_long) d = d + action(E, {OrbitKind::Long, s});
  return d - action(E, neg);
}

bool passes_action_filter(const Ellipsoid& E, const std::vector<long>& pos_short,
                          const std::vector<long>& pos_long, const ReebOrbit& neg) {
  return action_difference(E, pos_short, pos_long, neg).sign() >= 0;
}

Lemma41Report lemma41_suite(long k_lo, long k_hi, long m_max, long r_max) {
  if (k_lo < 2 || k_hi < k_lo || m_max < 0 || r_max < 1)
    throw Error(ErrorCode::InvalidInput, "invalid lemma suite ranges");
  Lemma41Report rep;
  for (long k = k_lo; k <= k_hi; ++k) {
    const Ellipsoid E = standard_ellipsoid(k);
    const PerturbedRational kk = E.b();
    for (long m = 0; m <= m_max; ++m) {
      for (long r = 1; r <= r_max; ++r) {
        for (int pattern = 1; pattern <= 4; ++pattern) {
          Lemma41Case c;
          c.pattern = pattern;
          c.k = k;
          c.m = m;
          c.r = r;
          ++rep.cases;
          std::vector<long> ps(m, 1), pl;
          if (pattern == 2 || pattern == 4) pl.push_back(1);
          ReebOrbit neg{pattern <= 2 ? OrbitKind::Short : OrbitKind::Long, r};
          if (!passes_action_filter(E, ps, pl, neg)) continue;
          c.admissible = true;
          ++rep.admissible;
          c.index = ind_symplectization(E, ps, pl, neg);
          const std::int64_t ind = c.index;
          std::int64_t bound = 0;
          std::ostringstream why;
          switch (pattern) {
            case 1: {
              bound = 0;
              bool trivial = m == 1 && r == 1;
              std::int64_t mid = 2 * r - 2 - 2 * (PerturbedRational(r) / kk).floor();
              c.equality = ind == 0;
              if (ind < 0) why << "index negative; ";
              if ((ind == 0) != trivial) why << "index zero does not match the trivial cylinder; ";
              if (ind < mid) why << "below 2r-2-2floor(r/(k+e)); ";
              break;
            }
            case 2: {
              bound = m + 1;
              c.equality = ind == bound;
              if (ind < bound) why << "index below m+1; ";
              break;
            }
            case 3: {
              bound = 2 * r + 2;
              std::int64_t mid = 2 * r * (2 * k - 1) + 2 - 2 * (PerturbedRational(r) * kk).floor();
              c.equality = ind == bound;
              if (ind < bound) why << "index below 2r+2; ";
              if (ind < mid) why << "below 2r(2k-1)+2-2floor(r(k+e)); ";
              if (c.equality != (k == 2 && m == 2 * r + 1)) why << "equality does not match k=2, m=2r+1; ";
              break;
            }
            case 4: {
              if (m == 0) {
                bound = 0;
                c.equality = ind == 0;
                if (r != 1) why << "m=0 admits only r=1; ";
                if (ind != 0) why << "m=0 curve is not index 0; ";
              } else {
                bound = 2 * r + 2;
                std::int64_t mid = (4 * k - 2) * r - 2 * k + 2 - 2 * (PerturbedRational(r) * kk).floor();
                c.equality = ind == bound;
                if (ind < bound) why << "index below 2r+2; ";
                if (ind < mid) why << "below (4k-2)r-2k+2-2floor(r(k+e)); ";
                if (ind == 0) why << "index 0 with m != 0; ";
                if (c.equality != (k == 2 && m == 2 * r - 1)) why << "equality does not match k=2, m=2r-1; ";
              }
              break;
            }
          }
          c.detail = why.str();
          c.passed = c.detail.empty();
          if (!(pattern == 4 && m == 0)) {
            auto key = std::make_pair(pattern, k);
            auto it = rep.minimum_excess.find(key);
            if (it == rep.minimum_excess.end() || ind - bound < it->second) rep.minimum_excess[key] = ind - bound;
          }
          if (c.equality) rep.equality_cases.push_back(c);
          if (!c.passed) rep.failures.push_back(c);
        }
      }
    }
  }
  return rep;
}

std::int64_t corollary41_rhs(const Ellipsoid& top, const Ellipsoid& bottom, long m,
                             const CurveAsymptotics& u, const CurveAsymptotics& ut) {
  if (m < 1) throw Error(ErrorCode::InvalidInput, "cover degree must be >= 1");
  const PerturbedRational ab = ratio(top.a(), top.b()), ba = top.ratio();
  const PerturbedRational cd = ratio(bottom.a(), bottom.b()), dc = bottom.ratio();
  std::int64_t rhs = 2 * m - 2;
  rhs += 2 * (static_cast<std::int64_t>(u.pos_short.size()) - m * static_cast<std::int64_t>(ut.pos_short.size()));
  rhs += 2 * (static_cast<std::int64_t>(u.pos_long.size()) - m * static_cast<std::int64_t>(ut.pos_long.size()));
  rhs += 2 * (floor_sum(u.pos_short, ab) - m * floor_sum(ut.pos_short, ab));
  rhs += 2 * (floor_sum(u.pos_long, ba) - m * floor_sum(ut.pos_long, ba));
  rhs -= 2 * (floor_sum(u.neg_short, cd) - m * floor_sum(ut.neg_short, cd));
  rhs -= 2 * (floor_sum(u.neg_long, dc) - m * floor_sum(ut.neg_long, dc));
  return rhs;
}

}  // namespace shapekit
