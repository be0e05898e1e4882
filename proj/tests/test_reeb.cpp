#include <doctest.h>

#include "shapekit/error.hpp"
#include "shapekit/reeb.hpp"

using namespace shapekit;

namespace {

PerturbedRational P(const char* s) { return PerturbedRational::parse(s); }

Rational frac(long n, long d) {
  Rational q(n, d);
  q.canonicalize();
  return q;
}

long oracle_floor(const Rational& v) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
  return f.get_si();
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

TEST_CASE("actions") {
  Ellipsoid E(PerturbedRational(1), P("2 + e"));
  CHECK(action(E, {OrbitKind::Short, 3}) == PerturbedRational(3));
  CHECK(action(E, {OrbitKind::Long, 1}) == P("2 + e"));
  for (long k = 1; k <= 5; ++k) {
    Ellipsoid tiny(P("e"), P("e") * P("7 + e"));
    CHECK(action(tiny, {OrbitKind::Short, k + 1}) == PerturbedRational(k + 1) * P("e"));
  }
}

TEST_CASE("ellipsoid validation") {
  CHECK(code_of([] { Ellipsoid(PerturbedRational(0), PerturbedRational(1)); }) == ErrorCode::NonPositiveInput);
  CHECK(code_of([] { Ellipsoid(PerturbedRational(3), PerturbedRational(2)); }) == ErrorCode::InvalidInput);
  CHECK(Ellipsoid(PerturbedRational(1), P("2 + e")).irrational_ratio());
  CHECK_FALSE(Ellipsoid(PerturbedRational(1), PerturbedRational(2)).irrational_ratio());
}

TEST_CASE("conley-zehnder on the ellipsoid") {
  Ellipsoid E(PerturbedRational(1), P("2 + e"));
  CHECK(cz_ellipsoid(E, {OrbitKind::Short, 1}) == 3);
  CHECK(cz_ellipsoid(E, {OrbitKind::Long, 1}) == 7);
  CHECK(cz_ellipsoid(E, {OrbitKind::Short, 5}) == 15);

  Ellipsoid degenerate(PerturbedRational(1), PerturbedRational(2));
  CHECK(code_of([&] { cz_ellipsoid(degenerate, {OrbitKind::Short, 1}); }) == ErrorCode::DegenerateOrbit);
}

TEST_CASE("conley-zehnder on the cosphere bundle") {
  CHECK(cz_cosphere({1, 0, Trivialization::Interior}).cz == frac(1, 2));
  CHECK(cz_cosphere({1, 0, Trivialization::Ambient}).cz == frac(5, 2));
  CHECK(cz_cosphere({-3, 2, Trivialization::Ambient}).cz == frac(-3, 2));
  CHECK(cz_cosphere({1, 0, Trivialization::Ambient}).morse_bott_dim == 1);
  CHECK(code_of([] { cz_cosphere({0, 0, Trivialization::Interior}); }) == ErrorCode::ZeroClass);
  CHECK(CosphereClass{2, 3, Trivialization::Interior}.embedded());
  CHECK_FALSE(CosphereClass{2, 4, Trivialization::Interior}.embedded());
  CHECK(CosphereClass{-1, 0, Trivialization::Interior}.embedded());
}

TEST_CASE("property: cz against a concrete perturbation") {
  const Rational e0 = frac(1, 1000000);
  for (long r = 1; r <= 10; ++r)
    for (long s = 1; s <= 4; ++s) {
      // E(s, r s + e) against the same ellipsoid with e = 1e-6
      Ellipsoid E(PerturbedRational(s), PerturbedRational(r * s) + PerturbedRational::epsilon());
      for (long k = 1; k <= 100; ++k) {
        Rational b = Rational(r * s) + e0;
        long fs = oracle_floor(Rational(k * s) / b);
        long fl = oracle_floor(Rational(k) * b / s);
        REQUIRE(cz_ellipsoid(E, {OrbitKind::Short, k}) == 2 * k + 2 * fs + 1);
        REQUIRE(cz_ellipsoid(E, {OrbitKind::Long, k}) == 2 * k + 2 * fl + 1);
      }
    }
}

TEST_CASE("property: parity and monotonicity") {
  for (const char* bs : {"2 + e", "3 - e", "7/2 + e", "10 + 1/3 e", "1 + e"}) {
    Ellipsoid E(PerturbedRational(1), P(bs));
    for (OrbitKind kind : {OrbitKind::Short, OrbitKind::Long}) {
      std::int64_t prev = -1;
      for (long k = 1; k <= 100; ++k) {
        std::int64_t cz = cz_ellipsoid(E, {kind, k});
        REQUIRE(cz % 2 != 0);
        REQUIRE(cz > prev);
        prev = cz;
      }
    }
  }
}

TEST_CASE("property: long minus short on E(1, k+e)") {
  for (long k = 2; k <= 10; ++k) {
    Ellipsoid E(PerturbedRational(1), PerturbedRational(k) + PerturbedRational::epsilon());
    CHECK(cz_ellipsoid(E, {OrbitKind::Long, 1}) - cz_ellipsoid(E, {OrbitKind::Short, 1}) == 2 * k);
  }
}

TEST_CASE("property: ambient cosphere formula") {
  for (long k = -6; k <= 6; ++k)
    for (long l = -6; l <= 6; ++l) {
      if (k == 0 && l == 0) continue;
      REQUIRE(cz_cosphere({k, l, Trivialization::Ambient}).cz == Rational(4 * (k + l) + 1) / 2);
      REQUIRE(cz_cosphere({k, l, Trivialization::Interior}).cz == frac(1, 2));
    }
}
