#pragma once

#include <cstdint>
#include <string>

#include "shapekit/exactnum.hpp"

namespace shapekit {

class Ellipsoid {
public:
  Ellipsoid(PerturbedRational a, PerturbedRational b);

  const PerturbedRational& a() const { return a_; }
  const PerturbedRational& b() const { return b_; }
  PerturbedRational ratio() const { return shapekit::ratio(b_, a_); }
  bool irrational_ratio() const { return ratio().irrational_marked(); }
  std::string str() const;

private:
  PerturbedRational a_, b_;
};

enum class OrbitKind { Short, Long };

struct ReebOrbit {
  OrbitKind kind = OrbitKind::Short;
  long multiplicity = 1;
};

const char* kind_name(OrbitKind k);
OrbitKind parse_kind(const std::string& s);

PerturbedRational action(const Ellipsoid& E, const ReebOrbit& o);

// throws DegenerateOrbit unless b/a is irrational-marked
void require_nondegenerate(const Ellipsoid& E);
std::int64_t cz_ellipsoid(const Ellipsoid& E, const ReebOrbit& o);

enum class Trivialization { Interior, Ambient };

struct CosphereClass {
  long k = 0;
  long l = 0;
  Trivialization trivialization = Trivialization::Interior;

  bool embedded() const;
};

struct MorseBottCZ {
  Rational cz;
  int morse_bott_dim = 1;
};

MorseBottCZ cz_cosphere(const CosphereClass& c);

}  // namespace shapekit
