#include "shapekit/linf.hpp"

#include <stdexcept>

#include "shapekit/error.hpp"

namespace shapekit {

namespace {

Rational factorial(long n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(f);
}

void require_large_S(bool large_S) {
  if (!large_S)
    throw Error(ErrorCode::InvalidInput, "only the large-S regime is modeled; pass large_S",
                {{"large_S", "false"}});
}

}  // namespace

BetaGen beta(long i, long j) {
  if (i < 0 || j < 0 || (i == 0 && j == 0))
    throw Error(ErrorCode::InvalidInput, "beta_{i,j} needs i, j >= 0, not both zero",
                {{"i", std::to_string(i)}, {"j", std::to_string(j)}});
  return {i, j};
}

void LinComb::add(long q, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(q, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void LinComb::add(const LinComb& other, const Rational& scale) {
  for (const auto& [q, c] : other.terms_) add(q, c * scale);
}

LinComb LinComb::scaled(const Rational& s) const {
  LinComb out;
  out.add(*this, s);
  return out;
}

Rational LinComb::coeff(long q) const {
  auto it = terms_.find(q);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::pair<long, long> optimal_index(const PerturbedRational& a, const PerturbedRational& b, long q) {
  if (q < 1) throw Error(ErrorCode::InvalidInput, "q must be positive", {{"q", std::to_string(q)}});
  if (a <= PerturbedRational(0) || b <= PerturbedRational(0))
    throw Error(ErrorCode::NonPositiveInput, "a and b must be positive", {{"a", a.str()}, {"b", b.str()}});
  // walk the merged progressions {i a} and {j b}; the q-th entry decides the pair
  long i = 0, j = 0;
  for (long step = 0; step < q; ++step) {
    PerturbedRational na = PerturbedRational(i + 1) * a, nb = PerturbedRational(j + 1) * b;
    auto c = na <=> nb;
    if (c == 0)
      throw Error(ErrorCode::TieDetected, "i a = j b for two indices; b/a must be irrational",
                  {{"a", a.str()}, {"b", b.str()}, {"q", std::to_string(q)}});
    if (c < 0)
      ++i;
    else
      ++j;
  }
  return {i, j};
}

BetaGen psi1(long k, long q) {
  if (k < 2) throw Error(ErrorCode::InvalidInput, "k must be at least 2", {{"k", std::to_string(k)}});
  auto [i, j] = optimal_index(PerturbedRational(1), PerturbedRational(k) + PerturbedRational::epsilon(), q);
  return {i, j};
}

LinComb phi1(const BetaGen& g, bool large_S) {
  require_large_S(large_S);
  beta(g.i, g.j);
  // optimal index of q = i + j for (e, eS) with S large is (q, 0)
  long q = g.i + g.j;
  LinComb out;
  out.add(q, factorial(q) / (factorial(g.i) * factorial(g.j)));
  return out;
}

LinComb Phi2Evaluator::operator()(const BetaGen& g1, const BetaGen& g2) {
  beta(g1.i, g1.j);
  beta(g2.i, g2.j);
  if (g1.j == 0 && g2.j == 0) return {};
  auto key = std::make_pair(g1, g2);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  LinComb out;
  if (rule_ == RewriteRule::FirstArgument)
    out = g1.j >= 1 ? reduce_first(g1, g2) : reduce_first(g2, g1);
  else
    out = g2.j >= 1 ? reduce_first(g2, g1) : reduce_first(g1, g2);
  memo_.emplace(key, out);
  return out;
}

// needs g1.j >= 1; lowers j1 by one
LinComb Phi2Evaluator::reduce_first(const BetaGen& g1, const BetaGen& g2) {
  if (g1.j < 1) throw std::logic_error("phi2 rewrite on j1 = 0");
  const long i1 = g1.i, j1 = g1.j, i2 = g2.i, j2 = g2.j;
  LinComb out = (*this)(BetaGen{i1 + 1, j1 - 1}, g2).scaled(i1 + 1);
  out.add(phi1(BetaGen{i1 + 1 + i2, j1 + j2}, true), -Rational((i1 + 1) * j2 - j1 * i2));
  return out.scaled(Rational(1, j1));
}

LinComb phi2(const BetaGen& g1, const BetaGen& g2, bool large_S) {
  require_large_S(large_S);
  Phi2Evaluator ev;
  return ev(g1, g2);
}

Rational pairing_coefficient(long k) {
  BetaGen g = psi1(k, k + 1);
  Rational c = phi2(g, g, true).coeff(2 * k + 3);
  Rational closed = Rational((2 * k + 3) * (k * k + k));
  if (c != closed) throw std::logic_error("pairing coefficient disagrees with (2k+3)(k^2+k)");
  return c;
}

}  // namespace shapekit
