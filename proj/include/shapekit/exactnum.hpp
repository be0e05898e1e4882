#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace shapekit {

using Rational = mpq_class;

bool is_integer(const Rational& q);
std::int64_t floor_of(const Rational& q);
std::int64_t ceil_of(const Rational& q);

// "p", "p/q", "-p/q" or a terminating decimal such as "0.9"
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

// Reads SHAPEKIT_EPS_DEGREE once; falls back to 2.
int default_degree_budget();

// q0 + q1 e + ... + qD e^D with e a positive infinitesimal.
class PerturbedRational {
public:
  PerturbedRational();
  PerturbedRational(long v);
  PerturbedRational(const Rational& q);
  explicit PerturbedRational(std::vector<Rational> coeffs,
                             int budget = default_degree_budget(),
                             bool truncated = false);

  static PerturbedRational epsilon(int budget = default_degree_budget());

  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(std::size_t i) const;
  Rational constant() const { return coeff(0); }
  int degree_budget() const { return budget_; }
  bool truncated() const { return truncated_; }
  bool irrational_marked() const;
  bool is_zero() const { return c_.empty(); }
  // index of the lowest nonzero coefficient, -1 for zero
  int valuation() const;
  // divides by e^n; the value must vanish to order n
  PerturbedRational shifted_down(int n) const;
  PerturbedRational with_budget(int budget) const;

  // -1, 0 or +1; throws IndeterminateComparison when the stored part is zero
  // but truncated terms were dropped
  int sign() const;
  std::strong_ordering compare(const PerturbedRational& other) const;

  std::int64_t floor() const;
  std::int64_t ceil() const;

  std::string str() const;
  static PerturbedRational parse(std::string_view text);

  friend PerturbedRational operator+(const PerturbedRational& x, const PerturbedRational& y);
  friend PerturbedRational operator-(const PerturbedRational& x, const PerturbedRational& y);
  friend PerturbedRational operator*(const PerturbedRational& x, const PerturbedRational& y);
  friend PerturbedRational operator/(const PerturbedRational& x, const PerturbedRational& y);
  PerturbedRational operator-() const;

  // structural equality of the stored coefficients
  friend bool operator==(const PerturbedRational& x, const PerturbedRational& y) {
    return x.c_ == y.c_;
  }
  friend std::strong_ordering operator<=>(const PerturbedRational& x, const PerturbedRational& y) {
    return x.compare(y);
  }

private:
  void normalize();

  std::vector<Rational> c_;
  int budget_;
  bool truncated_ = false;
};

// x/y after cancelling the common power of e; lets E(e, eS) have ratios
PerturbedRational ratio(const PerturbedRational& x, const PerturbedRational& y);

// (floor(a) - lam*floor(a/lam), ceil(a) - lam*ceil(a/lam))
std::pair<std::int64_t, std::int64_t> hermite_floor_gap(const PerturbedRational& a, long lambda);

}  // namespace shapekit
