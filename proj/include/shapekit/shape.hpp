#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "shapekit/geometry.hpp"

namespace shapekit {

using AreaClass = Point;

struct BasisChange {
  long a = 0;

  // columns give the new basis in terms of the old one
  std::array<std::array<long, 2>, 2> matrix() const { return {{{a + 1, a}, {-a, 1 - a}}}; }
  long determinant() const;
  AreaClass apply(const AreaClass& w) const;
};

std::pair<BasisChange, AreaClass> reduce_basis(const Rational& w1, const Rational& w2);

enum class DomainKind { Ball, Cylinder, Polydisk, EllipsoidIntRatio };

struct Domain4D {
  DomainKind kind = DomainKind::Ball;
  Rational p;  // a, or c for balls and cylinders
  Rational q;  // b; unused for balls and cylinders

  static Domain4D ball(const Rational& c);
  static Domain4D cylinder(const Rational& c);
  static Domain4D polydisk(const Rational& a, const Rational& b);
  static Domain4D ellipsoid(const Rational& a, const Rational& b);

  Domain4D scaled(const Rational& lambda) const;
  std::string str() const;
  friend bool operator==(const Domain4D&, const Domain4D&) = default;
};

enum class FundamentalDomain { FullShape, HamiltonianShape };
enum class Provenance { Established, Reconstructed };

const char* tag_name(FundamentalDomain t);
const char* provenance_name(Provenance p);

// Every region here is {0 < w1 < strip} united with a bounded convex cap,
// cut down to the fundamental domain.
struct ShapeProfile {
  Rational strip;
  std::vector<Constraint> cap;  // strict, nonnegative coefficients
  Rational cap_width = 0;       // cap lies in [0, width) x [0, height)
  Rational cap_height = 0;
};

struct Cell {
  std::vector<Constraint> constraints;
  AreaClass interior;  // relative-interior witness found on construction
  bool on_diagonal = false;
};

struct Region {
  FundamentalDomain tag = FundamentalDomain::FullShape;
  Domain4D domain;
  Provenance provenance = Provenance::Established;
  ShapeProfile profile;
  std::vector<Cell> cells;
};

ShapeProfile profile_of(const Domain4D& d);
Region reduced_shape(const Domain4D& d);
Region hamiltonian_shape(const Domain4D& d);
Region scaled(const Region& r, const Rational& lambda);

bool contains(const Region& r, const AreaClass& p);

// closures of the cells clipped to [0, W]^2, canonical vertex order
std::vector<Polygon> cell_polygons(const Region& r, const Rational& viewport);

// sup of w over {(w, w)} in the region (FullShape), from the profile
Rational diagonal_supremum(const ShapeProfile& p);

struct SampleReport {
  std::size_t points = 0;
  std::optional<AreaClass> counterexample;  // in x, not in y
};

// exact membership on a deterministic rank-1 lattice plus the special lines
SampleReport sample_difference(const Region& x, const Region& y, std::size_t min_points = 100000);

struct InclusionResult {
  bool included = false;
  std::optional<AreaClass> witness;
  std::string reason;
  std::size_t sample_points = 0;
  bool sample_agrees = true;  // the lattice also found (or failed to find) a difference
};

struct IncludeOptions {
  bool cross_check = true;
  std::size_t sample_points = 100000;
};

InclusionResult includes(const Region& x, const Region& y, const IncludeOptions& opts = {});

Rational capacity_lambda(const Domain4D& d, const Rational& lambda);
Rational hamiltonian_capacity_lambda(const Domain4D& d, const Rational& lambda);

enum class EmbedMode { Full, Hamiltonian };

bool embeds_L1x(const Rational& a, const Rational& b, const Rational& x, EmbedMode mode);

struct PolyPoly {
  Rational a, b, c, d;  // P(a,b) into P(c,d)
};
struct PolyEll {
  Rational a, b, c;  // P(1,a) into E(c, bc)
};

enum class Verdict { ObstructionFound, EmbeddingPossible, Inconclusive };
const char* verdict_name(Verdict v);

struct Thm13Result {
  Verdict verdict = Verdict::Inconclusive;
  std::optional<AreaClass> witness;
  bool closed_form = false;  // c/a < 2, or a + b <= bc
  std::optional<AreaClass> proof_point;  // ((c/2+a)/2, (b+d)/2) when in the fundamental domain
  bool proof_point_confirmed = false;
};

Thm13Result obstruction_check_thm13(const PolyPoly& c);
Thm13Result obstruction_check_thm13(const PolyEll& c);

}  // namespace shapekit
