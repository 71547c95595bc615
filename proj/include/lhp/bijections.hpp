#pragma once

// Executable bijections: Gamma_n and BME on (k,l)-lecture hall partitions,
// Theta insertion for the l-Euler theorem, permutation encodings and barred
// inversion sequences.

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lhp/enumeration.hpp"
#include "lhp/sequences.hpp"

namespace lhp {

/// Part value -> multiplicity, no zero multiplicities.
using PartMultiplicity = std::map<std::int64_t, std::int64_t>;

/// Parts are written in the given order as "v^m"; zero multiplicities are
/// skipped unless keep_zeros is set.
std::string multiplicity_to_string(const std::vector<std::pair<std::int64_t, std::int64_t>>& ordered,
                                   bool keep_zeros = false);

struct KL {
  std::int64_t k;
  std::int64_t l;
};

/// Gamma_n : G_{n-1} x N -> G_n with n = lambda.size() + 1.
Parts gamma(const Parts& lambda, std::int64_t s, KL kl);
/// Inverse of gamma; throws std::invalid_argument when mu is not a member.
std::pair<Parts, std::int64_t> gamma_inv(const Parts& mu, KL kl);

/// BME_n as multiplicities by position: entry i-1 counts copies of rho_i
/// (n even) or r_i (n odd).
std::vector<std::int64_t> bme_positions(const Parts& mu, KL kl);
Parts bme_inv_positions(const std::vector<std::int64_t>& mults, KL kl);

/// The parts used by BME_n: rho for even n, r for odd n.
std::vector<std::int64_t> bme_part_values(std::size_t n, KL kl);

PartMultiplicity bme(const Parts& mu, KL kl);
/// Throws when a part is not one of the allowed values for n.
Parts bme_inv(const PartMultiplicity& m, std::size_t n, KL kl);
/// "5^4 7^1 2^1 1^1": positions n..1; with keep_zeros every position is
/// listed, as in "13^0 5^4 7^1 2^1 1^1".
std::string bme_to_string(const Parts& mu, KL kl, bool keep_zeros = false);

/// Theta insertion of the parts p_i = a_i + a_{i-1} of the l-sequence.
Parts theta(const PartMultiplicity& mu, std::int64_t l);

struct ThetaReport {
  bool pass = true;
  std::uint64_t inputs = 0;
  bool weights_preserved = true;
  bool images_in_target = true;
  bool injective = true;
  bool counts_match = true;
  std::string note;
};

/// Checks Theta on every partition into parts p_i with weight <= N.
ThetaReport theta_bijectivity_check(std::int64_t l, std::int64_t N);

struct ThetaBmeProbe {
  std::uint64_t compared = 0;
  std::uint64_t agreed = 0;
};
/// Compares Theta with BME_n^{-1} at k = l for partitions into p_1..p_n.
ThetaBmeProbe theta_bme_probe(std::int64_t l, std::size_t n, std::int64_t N);

using Perm = std::vector<int>;

/// e_i = #{j < i : pi_j > pi_i}.
std::vector<std::int64_t> perm_to_invseq(const Perm& pi);
Perm invseq_to_perm(const std::vector<std::int64_t>& e);

struct BarredInvSeq {
  std::vector<std::int64_t> e;
  std::vector<std::int64_t> bars;  // b_i = bars weakly before position i
};

BarredInvSeq lhp_to_barred(const Parts& lambda, const SSeq& s);
/// Throws when a bar is missing at an ascent or the bars decrease.
Parts barred_to_lhp(const BarredInvSeq& b, const SSeq& s);

}  // namespace lhp
