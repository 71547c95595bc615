#pragma once

// Lecture hall cones: generators, fundamental parallelepipeds, lattice-point
// generating functions, Ehrhart counts and the Gorenstein classification.

#include <cstdint>
#include <optional>
#include <vector>

#include "lhp/algebra.hpp"
#include "lhp/enumeration.hpp"
#include "lhp/sequences.hpp"

namespace lhp {

using IntVec = std::vector<std::int64_t>;

struct ConeBasis {
  std::vector<IntVec> vectors;  // vector i starts at coordinate i
};

struct PiPointSet {
  std::vector<IntVec> points;  // lex sorted
  ConeBasis basis;
};

struct QuasiPoly {
  std::int64_t period = 1;
  std::vector<RationalPoly> constituents;  // indexed by t mod period
  Rational operator()(std::int64_t t) const;
};

/// v_i = (0, ..., 0, s_i, ..., s_n).
ConeBasis generators(const SSeq& s);
/// v_1..v_{n-1} followed by the last unit vector.
ConeBasis generators_prime(const SSeq& s);

/// Lattice points of the half-open parallelepiped, from minimally barred
/// inversion sequences; every point is re-solved for its coordinates in the
/// basis and checked to lie in [0,1).
PiPointSet pi_points(const SSeq& s);
/// Points for the basis with v_n replaced by the last unit vector.
PiPointSet pi_prime_points(const SSeq& s);

struct LatticeGf {
  SparsePoly numerator;  // in z_1..z_n
  std::vector<Monomial> denominators;  // z^{v_i}
  /// numerator / prod (1 - z^{v_i}) truncated by caps.
  TruncSeries expand(const Caps& caps) const;
};
LatticeGf lattice_gf(const SSeq& s);

/// #{lambda in L_n^(s) : lambda_n <= T}.
Int count_last_bounded(const SSeq& s, std::int64_t T);

/// |tP cap Z^n|, with P the members with lambda_n <= s_n.
RationalPoly ehrhart_poly_P(const SSeq& s);
/// h*(x) with sum_t i(t) x^t = h*(x)/(1-x)^{n+1}.
SparsePoly h_star(const SSeq& s);
/// |tR cap Z^n|, with R the members with lambda_n <= 1.
QuasiPoly ehrhart_quasi_R(const SSeq& s);

struct GorensteinResult {
  std::optional<IntVec> c;       // present iff Gorenstein
  std::optional<std::size_t> failing_index;  // one-based j where division fails
};
GorensteinResult gorenstein_check(const SSeq& s);

/// True iff some integer d maps the parallelepiped points onto themselves by
/// lambda -> d - lambda. Candidates d range over lambda_0 + points.
bool self_reciprocity_check(const SSeq& s);

/// s_1 = 1, s_2 = l, s_j = l s_{j-1} + m s_{j-2}; throws if a term is not positive.
SSeq linear_recurrence_sequence(std::int64_t l, std::int64_t m, std::size_t n);

}  // namespace lhp
