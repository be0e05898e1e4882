#include "shapekit/ech.hpp"

#include <string>
#include <vector>

#include "shapekit/error.hpp"

namespace shapekit {

namespace {

// sum_{i=1}^{n} floor(i r)
std::int64_t floor_sum(long n, const PerturbedRational& r) {
  std::int64_t s = 0;
  for (long i = 1; i <= n; ++i) s += (PerturbedRational(i) * r).floor();
  return s;
}

void check_set(const OrbitSet& s) {
  if (s.m1 < 0 || s.m2 < 0)
    throw Error(ErrorCode::InvalidInput, "orbit set multiplicities must be non-negative",
                {{"m1", std::to_string(s.m1)}, {"m2", std::to_string(s.m2)}});
}

}  // namespace

std::int64_t grading(const Ellipsoid& E, const OrbitSet& s) {
  require_nondegenerate(E);
  check_set(s);
  PerturbedRational ab = ratio(E.a(), E.b()), ba = E.ratio();
  std::int64_t half = (s.m1 + s.m2) + s.m1 * s.m2 + floor_sum(s.m1, ab) + floor_sum(s.m2, ba);
  return 2 * half;
}

std::int64_t ech_index(const CurrentEnds& ce) {
  return grading(ce.top_ellipsoid, ce.top) - grading(ce.bottom_ellipsoid, ce.bottom);
}

std::int64_t j0_index(const CurrentEnds& ce) {
  require_nondegenerate(ce.top_ellipsoid);
  require_nondegenerate(ce.bottom_ellipsoid);
  check_set(ce.top);
  check_set(ce.bottom);
  const Ellipsoid& T = ce.top_ellipsoid;
  const Ellipsoid& B = ce.bottom_ellipsoid;
  std::int64_t half = ce.top.m1 * ce.top.m2 - ce.bottom.m1 * ce.bottom.m2;
  half += floor_sum(ce.top.m1 - 1, ratio(T.a(), T.b())) + floor_sum(ce.top.m2 - 1, T.ratio());
  half -= floor_sum(ce.bottom.m1 - 1, ratio(B.a(), B.b())) + floor_sum(ce.bottom.m2 - 1, B.ratio());
  return 2 * half;
}

J0Bound j0_slack(std::int64_t j0, long genus, long delta, const std::map<EndOrbit, long>& ends) {
  if (genus < 0 || delta < 0) throw Error(ErrorCode::InvalidInput, "genus and delta must be non-negative");
  std::int64_t rhs = 2 * (genus - 1 + delta);
  for (const auto& [orbit, n] : ends) {
    if (n < 1) throw Error(ErrorCode::InvalidInput, "end counts must be >= 1");
    rhs += 2 * n - 1;
  }
  std::int64_t slack = j0 - rhs;
  return {slack >= 0, slack};
}

J0Bound j0_bound_check(const CurrentEnds& ce) {
  return j0_slack(j0_index(ce), ce.genus, ce.delta, ce.ends_per_orbit);
}

OrbitSet grading_match(const Ellipsoid& top_ellipsoid, const OrbitSet& top,
                       const Ellipsoid& bottom_ellipsoid, const PerturbedRational& action_cap) {
  const std::int64_t target = grading(top_ellipsoid, top);
  require_nondegenerate(bottom_ellipsoid);
  const Ellipsoid& B = bottom_ellipsoid;
  // prefix floor sums, so each candidate costs O(1)
  PerturbedRational ab = ratio(B.a(), B.b()), ba = B.ratio();
  std::vector<std::int64_t> f1{0}, f2{0};
  for (long n = 1; PerturbedRational(n) * B.a() <= action_cap; ++n)
    f1.push_back(f1.back() + (PerturbedRational(n) * ab).floor());
  for (long n = 1; PerturbedRational(n) * B.b() <= action_cap; ++n)
    f2.push_back(f2.back() + (PerturbedRational(n) * ba).floor());
  bool found = false;
  OrbitSet hit;
  for (long n1 = 0; n1 < long(f1.size()); ++n1) {
    for (long n2 = 0; n2 < long(f2.size()); ++n2) {
      if (2 * (n1 + n2 + n1 * n2 + f1[n1] + f2[n2]) != target) continue;
      if (found)
        throw Error(ErrorCode::MultipleMatches, "two orbit sets share the grading",
                    {{"grading", std::to_string(target)},
                     {"first", std::to_string(hit.m1) + "," + std::to_string(hit.m2)},
                     {"second", std::to_string(n1) + "," + std::to_string(n2)}});
      found = true;
      hit = OrbitSet{n1, n2};
    }
  }
  if (!found)
    throw Error(ErrorCode::NotFound, "no orbit set under the action cap has the target grading",
                {{"grading", std::to_string(target)}, {"action_cap", action_cap.str()}});
  return hit;
}

}  // namespace shapekit
