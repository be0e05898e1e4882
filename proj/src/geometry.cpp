#include "shapekit/geometry.hpp"

#include <algorithm>

namespace shapekit {

namespace {

bool lex_less(const Point& a, const Point& b) { return a.w1 < b.w1 || (a.w1 == b.w1 && a.w2 < b.w2); }

Rational cross(const Point& o, const Point& a, const Point& b) {
  return (a.w1 - o.w1) * (b.w2 - o.w2) - (a.w2 - o.w2) * (b.w1 - o.w1);
}

}  // namespace

bool Constraint::holds(const Point& p) const {
  Rational v = lhs(p);
  return strict ? v < gamma : v <= gamma;
}

Polygon box_polygon(const Rational& w1_max, const Rational& w2_max) {
  return {{0, 0}, {w1_max, 0}, {w1_max, w2_max}, {0, w2_max}};
}

Polygon clip(const Polygon& poly, const Constraint& c) {
  Polygon out;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point& P = poly[i];
    const Point& Q = poly[(i + 1) % n];
    Rational fp = c.lhs(P) - c.gamma, fq = c.lhs(Q) - c.gamma;
    bool in_p = fp <= 0, in_q = fq <= 0;
    if (in_p && in_q) {
      out.push_back(Q);
    } else if (in_p != in_q) {
      Rational t = fp / (fp - fq);
      Point X{P.w1 + t * (Q.w1 - P.w1), P.w2 + t * (Q.w2 - P.w2)};
      out.push_back(X);
      if (in_q) out.push_back(Q);
    }
  }
  return out;
}

Polygon canonical(const Polygon& poly) {
  Polygon p;
  for (const auto& v : poly)
    if (p.empty() || !(p.back() == v)) p.push_back(v);
  while (p.size() > 1 && p.front() == p.back()) p.pop_back();
  if (p.size() <= 1) return p;

  bool flat = true;
  for (std::size_t i = 2; i < p.size() && flat; ++i)
    if (cross(p[0], p[1], p[i]) != 0) flat = false;
  if (flat) {
    auto [lo, hi] = std::minmax_element(p.begin(), p.end(), lex_less);
    return {*lo, *hi};
  }

  bool changed = true;
  while (changed && p.size() > 3) {
    changed = false;
    for (std::size_t i = 0; i < p.size(); ++i) {
      const Point& a = p[(i + p.size() - 1) % p.size()];
      const Point& b = p[(i + 1) % p.size()];
      if (cross(a, p[i], b) == 0) {
        p.erase(p.begin() + i);
        changed = true;
        break;
      }
    }
  }
  Rational area2 = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Point& a = p[i];
    const Point& b = p[(i + 1) % p.size()];
    area2 += a.w1 * b.w2 - a.w2 * b.w1;
  }
  if (area2 < 0) std::reverse(p.begin(), p.end());
  auto first = std::min_element(p.begin(), p.end(), lex_less);
  std::rotate(p.begin(), first, p.end());
  return p;
}

Point vertex_average(const Polygon& poly) {
  Point s{0, 0};
  for (const auto& v : poly) {
    s.w1 += v.w1;
    s.w2 += v.w2;
  }
  Rational n(static_cast<long>(poly.size()));
  return {s.w1 / n, s.w2 / n};
}

}  // namespace shapekit
