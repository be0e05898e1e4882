#pragma once

#include <vector>

#include "shapekit/exactnum.hpp"

namespace shapekit {

struct Point {
  Rational w1, w2;
  friend bool operator==(const Point& p, const Point& q) { return p.w1 == q.w1 && p.w2 == q.w2; }
};

// alpha w1 + beta w2 < gamma (strict) or <= gamma
struct Constraint {
  Rational alpha, beta, gamma;
  bool strict = true;

  Rational lhs(const Point& p) const { return alpha * p.w1 + beta * p.w2; }
  bool holds(const Point& p) const;
  Constraint scaled(const Rational& lambda) const { return {alpha, beta, gamma * lambda, strict}; }
  friend bool operator==(const Constraint&, const Constraint&) = default;
};

using Polygon = std::vector<Point>;

// counterclockwise from the origin
Polygon box_polygon(const Rational& w1_max, const Rational& w2_max);
// clip against the closed half-plane of c
Polygon clip(const Polygon& poly, const Constraint& c);
// no repeated or collinear vertices, counterclockwise, starting at the
// lexicographically least vertex; segments become their two endpoints
Polygon canonical(const Polygon& poly);
Point vertex_average(const Polygon& poly);

}  // namespace shapekit
