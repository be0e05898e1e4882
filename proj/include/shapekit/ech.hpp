#pragma once

#include <compare>
#include <cstdint>
#include <map>

#include "shapekit/reeb.hpp"

namespace shapekit {

struct OrbitSet {
  long m1 = 0;
  long m2 = 0;
  friend bool operator==(const OrbitSet&, const OrbitSet&) = default;
};

std::int64_t grading(const Ellipsoid& E, const OrbitSet& s);

enum class Level { Top, Bottom };

struct EndOrbit {
  Level level;
  OrbitKind kind;
  friend auto operator<=>(const EndOrbit&, const EndOrbit&) = default;
};

struct CurrentEnds {
  Ellipsoid top_ellipsoid;
  OrbitSet top;
  Ellipsoid bottom_ellipsoid;
  OrbitSet bottom;
  long genus = 0;
  long delta = 0;
  std::map<EndOrbit, long> ends_per_orbit;
};

std::int64_t ech_index(const CurrentEnds& ce);
std::int64_t j0_index(const CurrentEnds& ce);

struct J0Bound {
  bool satisfied;
  std::int64_t slack;
};

// slack = J0 - [2(g - 1 + delta) + sum (2 n - 1)]
J0Bound j0_slack(std::int64_t j0, long genus, long delta, const std::map<EndOrbit, long>& ends);
J0Bound j0_bound_check(const CurrentEnds& ce);

OrbitSet grading_match(const Ellipsoid& top_ellipsoid, const OrbitSet& top,
                       const Ellipsoid& bottom_ellipsoid, const PerturbedRational& action_cap);

}  // namespace shapekit
