#pragma once

#include <map>
#include <string>
#include <utility>

#include "shapekit/exactnum.hpp"

namespace shapekit {

struct BetaGen {
  long i = 0;
  long j = 0;
  long weight() const { return i + j; }
  friend auto operator<=>(const BetaGen&, const BetaGen&) = default;
};

BetaGen beta(long i, long j);

// q -> coefficient of A_q; zero coefficients are never stored
class LinComb {
public:
  void add(long q, const Rational& c);
  void add(const LinComb& other, const Rational& scale = 1);
  LinComb scaled(const Rational& s) const;
  Rational coeff(long q) const;
  const std::map<long, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  friend bool operator==(const LinComb&, const LinComb&) = default;

private:
  std::map<long, Rational> terms_;
};

std::pair<long, long> optimal_index(const PerturbedRational& a, const PerturbedRational& b, long q);

// A_q -> beta_{i(q), j(q)} for the pair (1, k + e), constant normalized to 1
BetaGen psi1(long k, long q);

LinComb phi1(const BetaGen& g, bool large_S);

enum class RewriteRule { FirstArgument, SecondArgument };

// memo table for one evaluation context
class Phi2Evaluator {
public:
  explicit Phi2Evaluator(RewriteRule rule = RewriteRule::FirstArgument) : rule_(rule) {}
  LinComb operator()(const BetaGen& g1, const BetaGen& g2);
  std::size_t memo_size() const { return memo_.size(); }

private:
  LinComb reduce_first(const BetaGen& g1, const BetaGen& g2);

  RewriteRule rule_;
  std::map<std::pair<BetaGen, BetaGen>, LinComb> memo_;
};

LinComb phi2(const BetaGen& g1, const BetaGen& g2, bool large_S);

Rational pairing_coefficient(long k);

}  // namespace shapekit
