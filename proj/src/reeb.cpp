#include "shapekit/reeb.hpp"

#include <numeric>

#include "shapekit/error.hpp"

namespace shapekit {

Ellipsoid::Ellipsoid(PerturbedRational a, PerturbedRational b) : a_(std::move(a)), b_(std::move(b)) {
  if (a_.sign() <= 0 || b_.sign() <= 0)
    throw Error(ErrorCode::NonPositiveInput, "ellipsoid parameters must be positive",
                {{"a", a_.str()}, {"b", b_.str()}});
  if (a_ > b_)
    throw Error(ErrorCode::InvalidInput, "ellipsoid parameters must satisfy a <= b",
                {{"a", a_.str()}, {"b", b_.str()}});
}

std::string Ellipsoid::str() const { return "E(" + a_.str() + ", " + b_.str() + ")"; }

const char* kind_name(OrbitKind k) { return k == OrbitKind::Short ? "short" : "long"; }

OrbitKind parse_kind(const std::string& s) {
  if (s == "short") return OrbitKind::Short;
  if (s == "long") return OrbitKind::Long;
  throw Error(ErrorCode::ParseError, "orbit kind must be 'short' or 'long'", {{"input", s}});
}

PerturbedRational action(const Ellipsoid& E, const ReebOrbit& o) {
  if (o.multiplicity < 1) throw Error(ErrorCode::InvalidInput, "multiplicity must be >= 1");
  return PerturbedRational(o.multiplicity) * (o.kind == OrbitKind::Short ? E.a() : E.b());
}

void require_nondegenerate(const Ellipsoid& E) {
  if (!E.irrational_ratio())
    throw Error(ErrorCode::DegenerateOrbit, "b/a is rational; perturb the ellipsoid first",
                {{"ellipsoid", E.str()}});
}

std::int64_t cz_ellipsoid(const Ellipsoid& E, const ReebOrbit& o) {
  require_nondegenerate(E);
  if (o.multiplicity < 1) throw Error(ErrorCode::InvalidInput, "multiplicity must be >= 1");
  const long k = o.multiplicity;
  PerturbedRational r = o.kind == OrbitKind::Short ? ratio(E.a(), E.b()) : E.ratio();
  return 2 * k + 2 * (PerturbedRational(k) * r).floor() + 1;
}

bool CosphereClass::embedded() const { return std::gcd(k, l) == 1; }

MorseBottCZ cz_cosphere(const CosphereClass& c) {
  if (c.k == 0 && c.l == 0) throw Error(ErrorCode::ZeroClass, "(0,0) is not the class of a Reeb orbit");
  if (c.trivialization == Trivialization::Interior) return {Rational(1, 2), 1};
  return {Rational(2 * (c.k + c.l)) + Rational(1, 2), 1};
}

}  // namespace shapekit
