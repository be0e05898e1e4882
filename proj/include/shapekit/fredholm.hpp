#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "shapekit/reeb.hpp"

namespace shapekit {

struct CurveAsymptotics {
  std::vector<long> pos_short;  // r_i
  std::vector<long> pos_long;   // s_i
  std::vector<long> neg_short;  // t_i
  std::vector<long> neg_long;   // u_i
};

// One puncture as seen by the index formula. Morse-Bott ends carry dim 1.
struct EndDatum {
  Rational cz;
  int morse_bott_dim = 0;
};

// genus zero: (s+ + s- - 2) + 2 c1 + sum_+ (cz + dim/2) - sum_- (cz - dim/2)
Rational fredholm_index(const std::vector<EndDatum>& positive, const std::vector<EndDatum>& negative,
                        const Rational& chern = 0);

std::int64_t ind_cobordism(const Ellipsoid& top, const Ellipsoid& bottom, const CurveAsymptotics& ca);

std::int64_t ind_symplectization(const Ellipsoid& E, const std::vector<long>& pos_short,
                                 const std::vector<long>& pos_long, const ReebOrbit& neg);

struct MixedComponentEnds {
  long m_i = 0;
  int kappa = 0;
  long k_i = 0;
  long l_i = 0;
};

// simple alpha_1 ends contribute 4, simple alpha_2 ends 2k+4, the cosphere end 2(k_i+l_i)-1
std::int64_t ind_mixed_component(long k, long short_ends, long long_ends, long k_i, long l_i);
std::int64_t ind_mixed_component(long k, const MixedComponentEnds& me);
// m_i simple alpha_2 ends, no alpha_1 ends
std::int64_t ind_mixed_component_hamiltonian(long k, long m_i, long k_i, long l_i);

std::int64_t ind_F0(long T, long d, const PerturbedRational& S);

std::int64_t glue_index(const std::vector<std::int64_t>& parts, const std::vector<int>& matched_dims);

enum class RigidFamily { MixedMs, PureNs };

long rigid_negative_degree(long k, long m, RigidFamily family);
long rigid_degree_closed_form(long k, long m, RigidFamily family);

// total positive action minus negative action, exact in Q[e]
PerturbedRational action_difference(const Ellipsoid& E, const std::vector<long>& pos_short,
                                    const std::vector<long>& pos_long, const ReebOrbit& neg);
bool passes_action_filter(const Ellipsoid& E, const std::vector<long>& pos_short,
                          const std::vector<long>& pos_long, const ReebOrbit& neg);

struct Lemma41Case {
  int pattern = 0;
  long k = 0, m = 0, r = 0;
  std::int64_t index = 0;
  bool admissible = false;
  bool passed = true;
  bool equality = false;
  std::string detail;
};

struct Lemma41Report {
  std::size_t cases = 0;
  std::size_t admissible = 0;
  std::vector<Lemma41Case> failures;
  std::vector<Lemma41Case> equality_cases;
  // (pattern, k) -> least index minus the lemma's lower bound over admissible cases
  std::map<std::pair<int, long>, std::int64_t> minimum_excess;
  bool all_passed() const { return failures.empty(); }
};

Lemma41Report lemma41_suite(long k_lo, long k_hi, long m_max, long r_max);

// right side of the multiple-cover bound for an m-fold cover u of u_tilde
std::int64_t corollary41_rhs(const Ellipsoid& top, const Ellipsoid& bottom, long m,
                             const CurveAsymptotics& u, const CurveAsymptotics& u_tilde);

}  // namespace shapekit
