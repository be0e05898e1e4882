#include "shapekit/exactnum.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <stdexcept>

#include "shapekit/error.hpp"

namespace shapekit {

namespace {

std::int64_t to_int64(const mpz_class& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("integer result does not fit in 64 bits");
  return z.get_si();
}

mpz_class mpz_floor(const Rational& q) {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

mpz_class mpz_ceil(const Rational& q) {
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

std::string strip_spaces(std::string_view s) {
  std::string out;
  for (char ch : s)
    if (!std::isspace(static_cast<unsigned char>(ch))) out.push_back(ch);
  return out;
}

[[noreturn]] void parse_fail(std::string_view text, const std::string& why) {
  throw Error(ErrorCode::ParseError, "cannot parse number '" + std::string(text) + "': " + why,
              {{"input", std::string(text)}});
}

}  // namespace

bool is_integer(const Rational& q) { return q.get_den() == 1; }
std::int64_t floor_of(const Rational& q) { return to_int64(mpz_floor(q)); }
std::int64_t ceil_of(const Rational& q) { return to_int64(mpz_ceil(q)); }

Rational parse_rational(std::string_view text) {
  std::string s = strip_spaces(text);
  if (s.empty()) parse_fail(text, "empty");
  bool neg = false;
  std::size_t pos = 0;
  if (s[0] == '+' || s[0] == '-') {
    neg = s[0] == '-';
    pos = 1;
  }
  std::string body = s.substr(pos);
  if (body.empty()) parse_fail(text, "sign without digits");
  Rational q;
  auto digits = [](const std::string& d) {
    return !d.empty() && std::all_of(d.begin(), d.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); });
  };
  auto slash = body.find('/');
  auto dot = body.find('.');
  if (slash != std::string::npos) {
    std::string n = body.substr(0, slash), d = body.substr(slash + 1);
    if (!digits(n) || !digits(d)) parse_fail(text, "bad fraction");
    q = Rational(mpz_class(n), mpz_class(d));
    if (q.get_den() == 0) parse_fail(text, "zero denominator");
  } else if (dot != std::string::npos) {
    std::string ip = body.substr(0, dot), fp = body.substr(dot + 1);
    if (ip.empty()) ip = "0";
    if (!digits(ip) || !digits(fp)) parse_fail(text, "bad decimal");
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, fp.size());
    q = Rational(mpz_class(ip + fp), den);
  } else {
    if (!digits(body)) parse_fail(text, "bad integer");
    q = Rational(mpz_class(body));
  }
  q.canonicalize();
  return neg ? Rational(-q) : q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

int default_degree_budget() {
  static const int budget = [] {
    const char* env = std::getenv("SHAPEKIT_EPS_DEGREE");
    if (!env || !*env) return 2;
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 1 || v > 64) return 2;
    return static_cast<int>(v);
  }();
  return budget;
}

PerturbedRational::PerturbedRational() : budget_(default_degree_budget()) {}

PerturbedRational::PerturbedRational(long v) : budget_(default_degree_budget()) {
  c_.push_back(Rational(v));
  normalize();
}

PerturbedRational::PerturbedRational(const Rational& q) : budget_(default_degree_budget()) {
  c_.push_back(q);
  normalize();
}

PerturbedRational::PerturbedRational(std::vector<Rational> coeffs, int budget, bool truncated)
    : c_(std::move(coeffs)), budget_(budget), truncated_(truncated) {
  if (budget_ < 0) throw std::invalid_argument("negative degree budget");
  normalize();
}

PerturbedRational PerturbedRational::epsilon(int budget) {
  return PerturbedRational(std::vector<Rational>{0, 1}, budget);
}

void PerturbedRational::normalize() {
  for (auto& q : c_) q.canonicalize();
  if (c_.size() > static_cast<std::size_t>(budget_) + 1) {
    for (std::size_t i = budget_ + 1; i < c_.size(); ++i)
      if (c_[i] != 0) truncated_ = true;
    c_.resize(budget_ + 1);
  }
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational PerturbedRational::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }

bool PerturbedRational::irrational_marked() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return true;
  return false;
}

int PerturbedRational::valuation() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) return static_cast<int>(i);
  return -1;
}

PerturbedRational PerturbedRational::shifted_down(int n) const {
  if (n <= 0 || is_zero()) return *this;
  if (valuation() < n) throw std::logic_error("shifted_down below the valuation");
  std::vector<Rational> c(c_.begin() + n, c_.end());
  return PerturbedRational(std::move(c), budget_, truncated_);
}

PerturbedRational PerturbedRational::with_budget(int budget) const {
  return PerturbedRational(c_, budget, truncated_);
}

int PerturbedRational::sign() const {
  for (const auto& q : c_)
    if (q != 0) return sgn(q);
  if (truncated_)
    throw Error(ErrorCode::IndeterminateComparison,
                "sign unknown after truncation; raise the degree budget",
                {{"budget", std::to_string(budget_)}});
  return 0;
}

std::strong_ordering PerturbedRational::compare(const PerturbedRational& other) const {
  int s = (*this - other).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::int64_t PerturbedRational::floor() const {
  Rational q0 = constant();
  if (!is_integer(q0)) return floor_of(q0);
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return floor_of(q0) - (c_[i] < 0 ? 1 : 0);
  if (truncated_)
    throw Error(ErrorCode::IndeterminateComparison,
                "floor of " + str() + " depends on truncated terms; raise the degree budget",
                {{"value", str()}, {"budget", std::to_string(budget_)}});
  return floor_of(q0);
}

std::int64_t PerturbedRational::ceil() const {
  Rational q0 = constant();
  if (!is_integer(q0)) return ceil_of(q0);
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return ceil_of(q0) + (c_[i] > 0 ? 1 : 0);
  if (truncated_)
    throw Error(ErrorCode::IndeterminateComparison,
                "ceil of " + str() + " depends on truncated terms; raise the degree budget",
                {{"value", str()}, {"budget", std::to_string(budget_)}});
  return ceil_of(q0);
}

PerturbedRational operator+(const PerturbedRational& x, const PerturbedRational& y) {
  std::vector<Rational> c(std::max(x.c_.size(), y.c_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = x.coeff(i) + y.coeff(i);
  return PerturbedRational(std::move(c), std::max(x.budget_, y.budget_), x.truncated_ || y.truncated_);
}

PerturbedRational PerturbedRational::operator-() const {
  std::vector<Rational> c(c_);
  for (auto& q : c) q = -q;
  return PerturbedRational(std::move(c), budget_, truncated_);
}

PerturbedRational operator-(const PerturbedRational& x, const PerturbedRational& y) { return x + (-y); }

PerturbedRational operator*(const PerturbedRational& x, const PerturbedRational& y) {
  if (x.is_zero() || y.is_zero())
    return PerturbedRational(std::vector<Rational>{}, std::max(x.budget_, y.budget_),
                             x.truncated_ || y.truncated_);
  std::vector<Rational> c(x.c_.size() + y.c_.size() - 1);
  for (std::size_t i = 0; i < x.c_.size(); ++i)
    for (std::size_t j = 0; j < y.c_.size(); ++j) c[i + j] += x.c_[i] * y.c_[j];
  // the constructor drops degrees above the budget and flags nonzero ones
  return PerturbedRational(std::move(c), std::max(x.budget_, y.budget_), x.truncated_ || y.truncated_);
}

PerturbedRational operator/(const PerturbedRational& x, const PerturbedRational& y) {
  if (y.constant() == 0)
    throw Error(ErrorCode::DivisionByInfinitesimal, "division by " + y.str() + " (zero constant term)",
                {{"divisor", y.str()}});
  int D = std::max(x.budget_, y.budget_);
  std::vector<Rational> c(D + 1);
  Rational y0 = y.constant();
  for (int n = 0; n <= D; ++n) {
    Rational acc = x.coeff(n);
    for (int i = 1; i <= n; ++i) acc -= y.coeff(i) * c[n - i];
    c[n] = acc / y0;
  }
  // exact iff c*y reproduces x in every degree
  std::vector<Rational> prod(c.size() + y.c_.size());
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j < y.c_.size(); ++j) prod[i + j] += c[i] * y.c_[j];
  bool exact = true;
  for (std::size_t i = 0; i < prod.size(); ++i)
    if (prod[i] != x.coeff(i)) exact = false;
  for (std::size_t i = prod.size(); i < x.c_.size(); ++i)
    if (x.c_[i] != 0) exact = false;
  return PerturbedRational(std::move(c), D, x.truncated_ || y.truncated_ || !exact);
}

std::string PerturbedRational::str() const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    const Rational& q = c_[i];
    if (q == 0) continue;
    bool neg = q < 0;
    Rational mag = neg ? Rational(-q) : q;
    std::string body;
    if (i == 0) {
      body = mag.get_str();
    } else {
      if (mag != 1) body = mag.get_str() + " ";
      body += "e";
      if (i > 1) body += "^" + std::to_string(i);
    }
    if (out.empty())
      out = (neg ? "-" : "") + body;
    else
      out += (neg ? " - " : " + ") + body;
  }
  return out;
}

PerturbedRational PerturbedRational::parse(std::string_view text) {
  std::string s = strip_spaces(text);
  if (s.empty()) parse_fail(text, "empty");
  std::vector<Rational> c;
  std::size_t pos = 0;
  bool first = true;
  while (pos < s.size()) {
    bool neg = false;
    if (s[pos] == '+' || s[pos] == '-') {
      neg = s[pos] == '-';
      ++pos;
    } else if (!first) {
      parse_fail(text, "expected + or -");
    }
    first = false;
    std::size_t start = pos;
    while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/' || s[pos] == '.'))
      ++pos;
    Rational coef = 1;
    bool has_coef = pos > start;
    if (has_coef) coef = parse_rational(s.substr(start, pos - start));
    if (pos < s.size() && s[pos] == '*') {
      if (!has_coef) parse_fail(text, "dangling *");
      ++pos;
    }
    std::size_t degree = 0;
    if (pos < s.size() && (s[pos] == 'e' || s[pos] == 'd')) {
      ++pos;
      degree = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        std::size_t ds = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == ds) parse_fail(text, "missing exponent");
        degree = std::stoul(s.substr(ds, pos - ds));
      }
    } else if (!has_coef) {
      parse_fail(text, "empty term");
    }
    if (c.size() <= degree) c.resize(degree + 1);
    c[degree] += neg ? Rational(-coef) : coef;
  }
  int budget = std::max<int>(default_degree_budget(), static_cast<int>(c.size()) - 1);
  return PerturbedRational(std::move(c), budget);
}

PerturbedRational ratio(const PerturbedRational& x, const PerturbedRational& y) {
  int v = y.valuation();
  if (v <= 0) return x / y;
  if (!x.is_zero() && x.valuation() < v) return x / y;  // reports DivisionByInfinitesimal
  return x.shifted_down(v) / y.shifted_down(v);
}

std::pair<std::int64_t, std::int64_t> hermite_floor_gap(const PerturbedRational& a, long lambda) {
  if (lambda < 1) throw Error(ErrorCode::InvalidInput, "lambda must be a positive integer");
  if (a.sign() < 0) throw Error(ErrorCode::InvalidInput, "a must be non-negative", {{"a", a.str()}});
  PerturbedRational q = a / PerturbedRational(lambda);
  std::int64_t g1 = a.floor() - lambda * q.floor();
  std::int64_t g2 = a.ceil() - lambda * q.ceil();
  if (g1 < 0 || g2 < -lambda + 1) throw std::logic_error("Hermite floor gap out of range");
  return {g1, g2};
}

}  // namespace shapekit
