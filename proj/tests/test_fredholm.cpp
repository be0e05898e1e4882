#include <doctest.h>

#include <functional>
#include <random>

#include "shapekit/error.hpp"
#include "shapekit/fredholm.hpp"

using namespace shapekit;

namespace {

PerturbedRational num(long n) { return PerturbedRational(n); }
PerturbedRational eps() { return PerturbedRational::epsilon(); }

long oracle_floor(const Rational& v) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
  return f.get_si();
}

const Rational E0 = Rational(1) / 1000000;

// E(a, b0 + e) with e replaced by a concrete tiny rational
struct Concrete {
  Rational a, b;
  long cz(OrbitKind kind, long k) const {
    Rational q = kind == OrbitKind::Short ? k * a / b : k * b / a;
    return 2 * k + 2 * oracle_floor(q) + 1;
  }
};

// genus zero index from the generic formula: (s+ + s- - 2) + sum CZ+ - sum CZ-
long index_oracle(const Concrete& top, const Concrete& bot, const CurveAsymptotics& ca) {
  long s = long(ca.pos_short.size() + ca.pos_long.size() + ca.neg_short.size() + ca.neg_long.size());
  long ind = s - 2;
  for (long r : ca.pos_short) ind += top.cz(OrbitKind::Short, r);
  for (long r : ca.pos_long) ind += top.cz(OrbitKind::Long, r);
  for (long t : ca.neg_short) ind -= bot.cz(OrbitKind::Short, t);
  for (long t : ca.neg_long) ind -= bot.cz(OrbitKind::Long, t);
  return ind;
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::InvalidInput;
}

void partitions(long n, long max_part, std::vector<long>& cur, std::vector<std::vector<long>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (long p = std::min(n, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions(n - p, p, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<long>> partitions(long n) {
  std::vector<std::vector<long>> out;
  std::vector<long> cur;
  partitions(n, n, cur, out);
  return out;
}

}  // namespace

TEST_CASE("cobordism index") {
  for (long k = 2; k <= 6; ++k) {
    Ellipsoid top(num(1), num(k) + eps());
    Ellipsoid bot(num(1), num(k + 1) + eps());
    CHECK(ind_cobordism(top, bot, {{}, {1}, {k + 1}, {}}) == 0);
  }
  Ellipsoid top(num(1), num(2) + eps()), bot(num(1), num(40) + eps());
  CHECK(code_of([&] { ind_cobordism(top, bot, {}); }) == ErrorCode::EmptyAsymptotics);
  CHECK(code_of([&] { ind_cobordism(Ellipsoid(num(1), num(2)), bot, {{1}, {}, {1}, {}}); }) ==
        ErrorCode::DegenerateOrbit);
}

TEST_CASE("rigid degrees") {
  CHECK(rigid_negative_degree(2, 1, RigidFamily::MixedMs) == 5);
  CHECK(rigid_negative_degree(2, 2, RigidFamily::MixedMs) == 7);
  CHECK(rigid_negative_degree(2, 2, RigidFamily::PureNs) == 7);
  for (long k = 2; k <= 8; ++k)
    for (long m = 1; m <= 12; ++m) {
      long t = rigid_negative_degree(k, m, RigidFamily::MixedMs);
      long d = rigid_negative_degree(k, m, RigidFamily::PureNs);
      CHECK(t == 2 * m + k + 1);
      CHECK(d == (k + 2) * m - 1);
      // the solved degree really is index zero, one less or more is not
      Ellipsoid top(num(1), num(k) + eps());
      Ellipsoid bot(num(1), num(t + d + 2) + eps());
      std::vector<long> ones(m, 1);
      CHECK(ind_cobordism(top, bot, {ones, {1}, {t}, {}}) == 0);
      CHECK(ind_cobordism(top, bot, {ones, {1}, {t + 1}, {}}) == -2);
      CHECK(ind_cobordism(top, bot, {{}, ones, {d}, {}}) == 0);
      CHECK(ind_cobordism(top, bot, {{}, ones, {d - 1}, {}}) == 2);
    }
}

TEST_CASE("symplectization index") {
  for (long k = 2; k <= 6; ++k) {
    Ellipsoid E(num(1), num(k) + eps());
    CHECK(ind_symplectization(E, {1}, {}, {OrbitKind::Short, 1}) == 0);
  }
  Ellipsoid E2(num(1), num(2) + eps());
  CHECK(ind_symplectization(E2, {1, 1, 1}, {}, {OrbitKind::Long, 1}) == 4);
  for (long t = 1; t <= 6; ++t) {
    Ellipsoid ES(num(1), num(t + 1) + eps());
    CHECK(ind_symplectization(ES, {t}, {}, {OrbitKind::Short, t}) == 0);
  }
}

TEST_CASE("mixed components") {
  CHECK(ind_mixed_component(2, MixedComponentEnds{0, 0, 1, 0}) == 1);
  CHECK(ind_mixed_component(2, MixedComponentEnds{0, 1, -5, 0}) == -3);
  CHECK(ind_mixed_component_hamiltonian(2, 1, -4, 0) == -1);
  for (long k = 2; k <= 5; ++k)
    for (long mi = 0; mi <= 4; ++mi)
      for (int kappa = 0; kappa <= 1; ++kappa)
        for (long ki = -8; ki <= 8; ++ki)
          for (long li = -3; li <= 3; ++li) {
            std::int64_t ind = ind_mixed_component(k, MixedComponentEnds{mi, kappa, ki, li});
            REQUIRE(ind % 2 != 0);
            // both quoted specializations
            if (li == 0) REQUIRE(ind == (kappa ? 4 * mi + 2 * k + 2 * ki + 3 : 4 * mi + 2 * ki - 1));
            REQUIRE(ind_mixed_component_hamiltonian(k, mi, ki, li) == mi * (4 + 2 * k) - 1 + 2 * ki + 2 * li);
          }
}

TEST_CASE("central plane and gluing") {
  for (long d = 1; d <= 10; ++d) {
    PerturbedRational S = num(d + 1) + eps();
    CHECK(ind_F0(d + 1, d, S) == 0);
    CHECK(ind_F0(d, d, S) == -2);
    CHECK(ind_F0(d + 2, d, S) == 2);
    CHECK(code_of([&] { ind_F0(d + 1, d, num(d)); }) == ErrorCode::SNotLargeEnough);
  }
  CHECK(glue_index({0, 0}, {0}) == 0);
  CHECK(glue_index({0, 1, 1, 1}, {1, 1, 1}) == 0);
  CHECK(glue_index({}, {}) == 0);
}

TEST_CASE("lemma suite examples") {
  Lemma41Report rep = lemma41_suite(2, 2, 10, 4);
  CHECK(rep.all_passed());
  bool saw3 = false, saw1 = false;
  for (const auto& c : rep.equality_cases) {
    if (c.pattern == 3 && c.r == 1 && c.m == 3) saw3 = c.index == 4;
    if (c.pattern == 1 && c.r == 1 && c.m == 1) saw1 = c.index == 0;
  }
  CHECK(saw3);
  CHECK(saw1);
  // the (3) lower bound is not tight once k > 2
  Lemma41Report wide = lemma41_suite(2, 5, 20, 6);
  CHECK(wide.minimum_excess.at({3, 2}) == 0);
  for (long k = 3; k <= 5; ++k) CHECK(wide.minimum_excess.at({3, k}) > 0);
}

TEST_CASE("lemma suite: equality for the fourth pattern at k > 2") {
  // m = r = 1 with an extra long end hits 2r+2 for every k; the suite reports it
  Lemma41Report rep = lemma41_suite(2, 6, 30, 10);
  for (const auto& c : rep.failures) {
    CHECK(c.pattern == 4);
    CHECK(c.k > 2);
    CHECK(c.m == 1);
    CHECK(c.r == 1);
    CHECK(c.index == 4);
  }
  CHECK(rep.failures.size() == 4);
}

TEST_CASE("property: cobordism index against the generic formula") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> mult(1, 9), cnt(0, 3), kk(2, 6), ss(2, 30);
  for (int n = 0; n < 4000; ++n) {
    long k = kk(rng), S = ss(rng);
    CurveAsymptotics ca;
    auto fill = [&](std::vector<long>& v) {
      long c = cnt(rng);
      for (long i = 0; i < c; ++i) v.push_back(mult(rng));
    };
    fill(ca.pos_short);
    fill(ca.pos_long);
    fill(ca.neg_short);
    fill(ca.neg_long);
    if (ca.pos_short.empty() && ca.pos_long.empty() && ca.neg_short.empty() && ca.neg_long.empty()) continue;
    Ellipsoid top(num(1), num(k) + eps()), bot(num(1), num(S) + eps());
    std::int64_t ind = ind_cobordism(top, bot, ca);
    REQUIRE(ind == index_oracle({1, k + E0}, {1, S + E0}, ca));
    REQUIRE(ind % 2 == 0);
  }
}

TEST_CASE("property: cobordism index is additive through a middle ellipsoid") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<long> mult(1, 6), cnt(1, 3);
  for (int n = 0; n < 2000; ++n) {
    Ellipsoid top(num(1), num(2) + eps()), mid(num(1), num(5) + eps()), bot(num(1), num(11) + eps());
    CurveAsymptotics upper, lower;
    for (long i = cnt(rng); i > 0; --i) upper.pos_short.push_back(mult(rng));
    for (long i = cnt(rng); i > 0; --i) upper.neg_short.push_back(mult(rng));
    // lower curve picks up exactly where upper ends
    lower.pos_short = upper.neg_short;
    for (long i = cnt(rng); i > 0; --i) lower.neg_long.push_back(mult(rng));
    CurveAsymptotics whole{upper.pos_short, {}, {}, lower.neg_long};
    std::int64_t a = ind_cobordism(top, mid, upper), b = ind_cobordism(mid, bot, lower);
    std::int64_t glued = glue_index({a, b}, std::vector<int>(upper.neg_short.size(), 0));
    // matching several ends through the middle adds genus-zero corrections
    long extra = 2 * (long(upper.neg_short.size()) - 1);
    REQUIRE(glued == ind_cobordism(top, bot, whole) + extra);
  }
}

TEST_CASE("property: multiple cover bound") {
  // for an m-fold cover the bound's right side is ind(u) - m ind(u~)
  Ellipsoid top(num(1), num(3) + eps()), bot(num(1), num(17) + eps());
  std::size_t checked = 0;
  std::vector<long> mults{1, 2, 3};
  std::function<void(CurveAsymptotics&, int)> grow = [&](CurveAsymptotics& ut, int ends_left) {
    std::size_t total = ut.pos_short.size() + ut.pos_long.size() + ut.neg_short.size() + ut.neg_long.size();
    if (total > 0 && (!ut.pos_short.empty() || !ut.pos_long.empty())) {
      std::int64_t ind_t = ind_cobordism(top, bot, ut);
      if (ind_t >= 0) {
        for (long m = 1; m <= 4; ++m) {
          // an end of u~ with multiplicity r lifts to ends r d_1, r d_2, ... with d_1 + d_2 + ... = m
          std::vector<std::pair<int, long>> slots;
          for (long r : ut.pos_short) slots.push_back({0, r});
          for (long r : ut.pos_long) slots.push_back({1, r});
          for (long r : ut.neg_short) slots.push_back({2, r});
          for (long r : ut.neg_long) slots.push_back({3, r});
          CurveAsymptotics u;
          std::function<void(std::size_t)> cover = [&](std::size_t i) {
            if (i == slots.size()) {
              std::int64_t rhs = corollary41_rhs(top, bot, m, u, ut);
              std::int64_t ind_u = ind_cobordism(top, bot, u);
              REQUIRE(ind_u - rhs == m * ind_t);
              REQUIRE(rhs <= ind_u);
              ++checked;
              return;
            }
            auto [slot, r] = slots[i];
            std::vector<long>& v = slot == 0 ? u.pos_short : slot == 1 ? u.pos_long : slot == 2 ? u.neg_short : u.neg_long;
            for (const auto& part : partitions(m)) {
              for (long d : part) v.push_back(r * d);
              cover(i + 1);
              v.resize(v.size() - part.size());
            }
          };
          cover(0);
        }
      }
    }
    if (ends_left == 0) return;
    for (long r : mults) {
      for (int slot = 0; slot < 4; ++slot) {
        std::vector<long>& v = slot == 0 ? ut.pos_short : slot == 1 ? ut.pos_long : slot == 2 ? ut.neg_short : ut.neg_long;
        // keep each list non-increasing so every u~ is visited once
        if (!v.empty() && v.back() < r) continue;
        bool later_used = false;
        for (int s2 = slot + 1; s2 < 4; ++s2) {
          const auto& w = s2 == 1 ? ut.pos_long : s2 == 2 ? ut.neg_short : ut.neg_long;
          if (!w.empty()) later_used = true;
        }
        if (later_used) continue;
        v.push_back(r);
        grow(ut, ends_left - 1);
        v.pop_back();
      }
    }
  };
  CurveAsymptotics ut;
  grow(ut, 3);
  CHECK(checked > 1000);
}
