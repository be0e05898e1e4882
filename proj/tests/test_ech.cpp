#include <doctest.h>

#include <random>

#include "shapekit/ech.hpp"
#include "shapekit/error.hpp"

using namespace shapekit;

namespace {

PerturbedRational P(const char* s) { return PerturbedRational::parse(s); }
PerturbedRational num(long n) { return PerturbedRational(n); }
const PerturbedRational& eps() {
  static const PerturbedRational e = PerturbedRational::epsilon();
  return e;
}

long oracle_floor(const Rational& v) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
  return f.get_si();
}

// grading of E(a, b) with b/a irrational, evaluated on plain rationals
// standing in for a concrete small perturbation
long grading_oracle(const Rational& a, const Rational& b, long m1, long m2) {
  long s = m1 + m2 + m1 * m2;
  for (long i = 1; i <= m1; ++i) s += oracle_floor(i * a / b);
  for (long i = 1; i <= m2; ++i) s += oracle_floor(i * b / a);
  return 2 * s;
}

CurrentEnds ends(const Ellipsoid& top_e, OrbitSet top, const Ellipsoid& bot_e, OrbitSet bot) {
  return CurrentEnds{top_e, top, bot_e, bot, 0, 0, {}};
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

}  // namespace

TEST_CASE("gradings") {
  for (long k = 2; k <= 6; ++k) {
    Ellipsoid E(num(1), num(k) + eps());
    CHECK(grading(E, {0, 1}) == 2 * (1 + k));
    Ellipsoid F(num(1), num(k + 1) + eps());
    CHECK(grading(F, {k + 1, 0}) == 2 * (k + 1));
  }
  Ellipsoid E(num(3), num(6) + eps());
  CHECK(grading(E, {0, 1}) == 6);
  CHECK(grading(E, {0, 0}) == 0);
  CHECK(code_of([] { grading(Ellipsoid(num(1), num(2)), {1, 0}); }) == ErrorCode::DegenerateOrbit);
}

TEST_CASE("ech index") {
  for (long k = 2; k <= 6; ++k) {
    Ellipsoid top(num(1), num(k) + eps());
    Ellipsoid bot(num(1), num(k + 1) + eps());
    CHECK(ech_index(ends(top, {0, 1}, bot, {k + 1, 0})) == 0);
  }
  Ellipsoid E(num(1), P("2 + e"));
  CHECK(ech_index(ends(E, {2, 3}, E, {2, 3})) == 0);
  CHECK(ech_index(ends(E, {1, 1}, E, {0, 0})) == 10);
}

TEST_CASE("j0 index") {
  for (long k = 2; k <= 6; ++k) {
    Ellipsoid top(num(1), num(k) + eps());
    Ellipsoid bot(num(1), num(k + 1) + eps());
    CHECK(j0_index(ends(top, {0, 1}, bot, {k + 1, 0})) == 0);
  }
  Ellipsoid E(num(1), P("2 + e"));
  CHECK(j0_index(ends(E, {3, 1}, E, {3, 1})) == 0);
  CHECK(j0_index(ends(E, {0, 2}, E, {0, 0})) == 4);
}

TEST_CASE("j0 genus bound") {
  Ellipsoid top(num(1), P("2 + e"));
  Ellipsoid bot(num(1), P("3 + e"));
  CurrentEnds ce = ends(top, {0, 1}, bot, {3, 0});
  ce.ends_per_orbit = {{{Level::Top, OrbitKind::Long}, 1}, {{Level::Bottom, OrbitKind::Short}, 1}};
  J0Bound b = j0_bound_check(ce);
  CHECK(b.satisfied);
  CHECK(b.slack == 0);

  J0Bound g1 = j0_slack(2, 1, 0, {{{Level::Top, OrbitKind::Short}, 1}});
  CHECK(g1.slack == 1);
  CHECK(g1.satisfied);
  CHECK(j0_slack(0, 0, 0, {}).slack == 2);
  CHECK_FALSE(j0_slack(0, 2, 0, {}).satisfied);
}

TEST_CASE("grading match") {
  for (long k = 2; k <= 6; ++k) {
    Ellipsoid top(num(1), num(k) + eps());
    Ellipsoid bot(num(1), num(k + 1) + eps());
    CHECK(grading_match(top, {0, 1}, bot, num(100)) == OrbitSet{k + 1, 0});
    CHECK(grading_match(top, {0, 0}, bot, num(100)) == OrbitSet{0, 0});
  }
  Ellipsoid top(num(1), P("2 + e"));
  Ellipsoid bot(num(1), P("3 + e"));
  CHECK(grading_match(top, {1, 0}, bot, num(10)) == OrbitSet{1, 0});
  CHECK(code_of([&] { grading_match(top, {5, 5}, bot, num(2)); }) == ErrorCode::NotFound);
}

TEST_CASE("property: grading against rational oracle") {
  const Rational e0 = Rational(1) / 1000000;
  for (long a = 1; a <= 3; ++a)
    for (long r = 1; r <= 6; ++r) {
      Ellipsoid E(num(a), num(r * a) + eps());
      for (long m1 = 0; m1 <= 30; ++m1)
        for (long m2 = 0; m2 <= 30; ++m2)
          REQUIRE(grading(E, {m1, m2}) == grading_oracle(Rational(a), Rational(r * a) + e0, m1, m2));
    }
}

TEST_CASE("property: grading is even and strictly increasing") {
  for (const char* bs : {"2 + e", "5/2 - e", "4 + e", "1 + e"}) {
    Ellipsoid E(num(1), P(bs));
    for (long m1 = 0; m1 <= 30; ++m1)
      for (long m2 = 0; m2 <= 30; ++m2) {
        std::int64_t g = grading(E, {m1, m2});
        REQUIRE(g % 2 == 0);
        REQUIRE(grading(E, {m1 + 1, m2}) > g);
        REQUIRE(grading(E, {m1, m2 + 1}) > g);
      }
  }
}

TEST_CASE("property: ech index is additive") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> m(0, 12), r(1, 6);
  for (int n = 0; n < 500; ++n) {
    Ellipsoid e1(num(1), num(r(rng)) + eps()), e2(num(2), num(2 * r(rng)) + eps()), e3(num(1), num(r(rng)) + eps());
    OrbitSet s1{m(rng), m(rng)}, s2{m(rng), m(rng)}, s3{m(rng), m(rng)};
    REQUIRE(ech_index(ends(e1, s1, e2, s2)) + ech_index(ends(e2, s2, e3, s3)) == ech_index(ends(e1, s1, e3, s3)));
  }
}

TEST_CASE("property: matched sets share the grading and match back") {
  Ellipsoid top(num(1), P("3 + e"));
  Ellipsoid bot(num(1), P("5 - e"));
  for (long m1 = 0; m1 <= 8; ++m1)
    for (long m2 = 0; m2 <= 8; ++m2) {
      OrbitSet down = grading_match(top, {m1, m2}, bot, num(60));
      REQUIRE(grading(bot, down) == grading(top, {m1, m2}));
      OrbitSet up = grading_match(bot, down, top, num(60));
      REQUIRE(up == OrbitSet{m1, m2});
    }
}
