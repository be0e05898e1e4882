#include <doctest.h>

#include <functional>

#include "shapekit/error.hpp"
#include "shapekit/linf.hpp"

using namespace shapekit;

namespace {

PerturbedRational num(long n) { return PerturbedRational(n); }

Rational fact(long n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(f);
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

LinComb single(long q, const Rational& c) {
  LinComb l;
  l.add(q, c);
  return l;
}

// brute minimax over i + j = q at a concrete perturbation
std::pair<long, long> optimal_oracle(const Rational& a, const Rational& b, long q) {
  std::pair<long, long> best{-1, -1};
  Rational best_v;
  for (long i = 0; i <= q; ++i) {
    Rational v = std::max<Rational>(i * a, (q - i) * b);
    if (best.first < 0 || v < best_v) {
      best = {i, q - i};
      best_v = v;
    }
  }
  return best;
}

std::vector<BetaGen> gens_up_to(long w) {
  std::vector<BetaGen> out;
  for (long i = 0; i <= w; ++i)
    for (long j = 0; i + j <= w; ++j)
      if (i + j > 0) out.push_back({i, j});
  return out;
}

}  // namespace

TEST_CASE("optimal indices") {
  for (long k = 2; k <= 8; ++k) {
    CHECK(optimal_index(num(1), num(k) + PerturbedRational::epsilon(), k + 1) == std::pair<long, long>{k, 1});
    CHECK(optimal_index(num(1), num(2 * k + 4) + PerturbedRational::epsilon(), 2 * k + 3) ==
          std::pair<long, long>{2 * k + 3, 0});
  }
  CHECK(optimal_index(num(1), num(1) + PerturbedRational::epsilon(), 2) == std::pair<long, long>{1, 1});
  CHECK(code_of([] { optimal_index(num(1), num(2), 2); }) == ErrorCode::TieDetected);
}

TEST_CASE("property: optimal index against brute minimax") {
  const Rational e0 = Rational(1) / 1000000;
  for (long k = 1; k <= 9; ++k)
    for (long q = 1; q <= 60; ++q) {
      auto got = optimal_index(num(1), num(k) + PerturbedRational::epsilon(), q);
      REQUIRE(got == optimal_oracle(1, k + e0, q));
      REQUIRE(got.first + got.second == q);
    }
}

TEST_CASE("psi1") {
  CHECK(psi1(2, 3) == beta(2, 1));
  CHECK(psi1(2, 1) == beta(1, 0));
  CHECK(psi1(3, 4) == beta(3, 1));
  CHECK(code_of([] { beta(0, 0); }) == ErrorCode::InvalidInput);
  CHECK(code_of([] { beta(-1, 2); }) == ErrorCode::InvalidInput);
}

TEST_CASE("phi1") {
  CHECK(phi1(beta(6, 1), true) == single(7, 7));
  CHECK(phi1(beta(5, 2), true) == single(7, 21));
  for (long q = 1; q <= 10; ++q) CHECK(phi1(beta(q, 0), true) == single(q, 1));
  CHECK(code_of([] { phi1(beta(1, 1), false); }) == ErrorCode::InvalidInput);
  for (const BetaGen& g : gens_up_to(20)) {
    LinComb l = phi1(g, true);
    REQUIRE(l.terms().size() == 1u);
    Rational c = l.coeff(g.i + g.j);
    REQUIRE(c == fact(g.i + g.j) / (fact(g.i) * fact(g.j)));
    REQUIRE(c.get_den() == 1);
    REQUIRE(c > 0);
  }
}

TEST_CASE("phi2 examples") {
  // one rewrite: phi2(b01, b10) = b10-b10 term (zero) + phi1(b21)
  CHECK(phi2(beta(0, 1), beta(1, 0), true) == single(3, 3));
  CHECK(phi2(beta(3, 0), beta(4, 0), true).is_zero());
  CHECK(phi2(beta(2, 1), beta(2, 1), true).coeff(7) == 42);
  CHECK(code_of([] { phi2(beta(1, 1), beta(1, 0), false); }) == ErrorCode::InvalidInput);
}

TEST_CASE("property: phi2 satisfies the defining relation") {
  // j1 P(b[i1-1,j1], g) - i1 P(b[i1,j1-1], g) + (i1 j2 - j1 i2) phi1(b[i1+i2, j1+j2]) = 0
  Phi2Evaluator ev;
  std::size_t checked = 0;
  for (long i1 = 1; i1 <= 7; ++i1)
    for (long j1 = 1; i1 + j1 <= 8; ++j1)
      for (const BetaGen& g : gens_up_to(6)) {
        LinComb sum = ev(BetaGen{i1 - 1, j1}, g).scaled(j1);
        sum.add(ev(BetaGen{i1, j1 - 1}, g), -i1);
        sum.add(phi1(BetaGen{i1 + g.i, j1 + g.j}, true), Rational(i1 * g.j - j1 * g.i));
        REQUIRE(sum.is_zero());
        ++checked;
      }
  CHECK(checked > 500);
}

TEST_CASE("property: phi2 symmetric and confluent") {
  Phi2Evaluator first(RewriteRule::FirstArgument), second(RewriteRule::SecondArgument);
  auto gens = gens_up_to(11);
  for (const BetaGen& a : gens)
    for (const BetaGen& b : gens) {
      if (a.weight() + b.weight() > 12) continue;
      LinComb x = first(a, b);
      REQUIRE(x == first(b, a));
      REQUIRE(x == second(a, b));
      // single output term, one above the total weight
      if (!x.is_zero()) {
        REQUIRE(x.terms().size() == 1u);
        REQUIRE(x.terms().begin()->first == a.weight() + b.weight() + 1);
      }
    }
  CHECK(first.memo_size() > 0);
}

TEST_CASE("pairing coefficient") {
  CHECK(pairing_coefficient(2) == 42);
  CHECK(pairing_coefficient(3) == 108);
  CHECK(pairing_coefficient(5) == 390);
  for (long k = 2; k <= 8; ++k) {
    Rational c = pairing_coefficient(k);
    CHECK(c == (2 * k + 3) * (k * k + k));
    CHECK(c != 0);
    // the same number from the two-term expansion in the nonvanishing argument
    Rational expansion = Rational((k + 1) * (k + 1)) * (2 * k + 3) - Rational((2 * k + 3) * (2 * k + 2)) / 2;
    CHECK(c == expansion);
  }
}
