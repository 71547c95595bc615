#pragma once

// Shared plumbing for the registry translation units.

#include <random>
#include <string>
#include <vector>

#include "lhp/algebra.hpp"
#include "lhp/harness.hpp"
#include "lhp/sequences.hpp"

namespace lhp::harness::detail {

std::int64_t get_int(const Params& p, const char* key);
std::int64_t get_int(const Params& p, const char* key, std::int64_t fallback);
std::string get_str(const Params& p, const char* key, const std::string& fallback);
/// "s" holds a sequence spec such as "1,2,3" or "kl:1,4:n=6".
SSeq get_seq(const Params& p, const char* key = "s");
int cap_of(const Caps& caps, int var);

SSeq one_to_n(std::int64_t n);
SSeq n_to_one(std::int64_t n);

/// 1 + m + ... + m^{k-1}.
SparsePoly geometric_sum(int k, const Monomial& m);
SparsePoly counts_poly(const std::vector<Int>& counts, int var);
/// prod 1/(1 - m_i) under caps.
TruncSeries product_inverse(const std::vector<Monomial>& ms, const Caps& caps);
/// poly / prod (1 - m_i) under caps.
TruncSeries divide_by_factors(const SparsePoly& numerator, const std::vector<Monomial>& ms, const Caps& caps);

/// r * prod_{i<n} (1 - sign a step^i), or r divided by that product. With
/// n == nullopt the product runs until the caps cut the factors off.
TruncSeries times_pochhammer(const TruncSeries& r, const Monomial& a, const Monomial& step, std::optional<int> n,
                             int sign, bool divide);

std::string seq_param(const SSeq& s);
/// count sequences with length in [min_n, max_n] and entries in [1, max_s].
std::vector<SSeq> random_sequences(std::uint64_t seed, int count, int min_n, int max_n, int max_s);

void add_partition_theorems(std::vector<Entry>& out);
void add_permutation_theorems(std::vector<Entry>& out);
void add_geometry_theorems(std::vector<Entry>& out);

}  // namespace lhp::harness::detail
