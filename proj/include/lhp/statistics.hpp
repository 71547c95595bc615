#pragma once

// Permutation, signed-permutation, multiset-word and inversion-sequence
// statistics, with generators and distribution assembly.

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "lhp/algebra.hpp"
#include "lhp/sequences.hpp"

namespace lhp {

using Perm = std::vector<int>;        // images pi_1..pi_n of 1..n
using SignedPerm = std::vector<int>;  // sigma_i = +-pi(i)
using MultisetWord = std::vector<int>;
using InvSeq = std::vector<std::int64_t>;

struct PermStats {
  std::vector<int> Des;  // positions i in 1..n-1 with pi_i > pi_{i+1}
  std::int64_t des = 0, maj = 0, comaj = 0, inv = 0, exc = 0, cyc = 0;
  std::int64_t bin = 0, sq = 0, binv = 0, sqin = 0, lhp = 0, siz = 0;
};

/// Throws std::invalid_argument when pi is not a permutation of 1..n.
PermStats perm_stats(const Perm& pi);

/// Asc e = {0 <= i < n : e_i/s_i < e_{i+1}/s_{i+1}} with e_0 = 0, s_0 = 1.
std::vector<int> ascent_set(const InvSeq& e, const SSeq& s);

struct InvSeqStats {
  std::vector<int> Asc;
  std::int64_t asc = 0, amaj = 0, lhp = 0, weight = 0;
};

/// Throws when some e_i falls outside [0, s_i).
InvSeqStats invseq_stats(const InvSeq& e, const SSeq& s);

enum class SignedFlavor { B, D };

/// Descents over positions 0..n-1 with sigma_0 = 0 (B) or -sigma_2 (D).
int des_signed(const SignedPerm& sigma, SignedFlavor flavor);
/// Strict descents w_i > w_{i+1} without a boundary letter.
int des_multiset(const MultisetWord& w);

void for_each_perm(int n, const std::function<void(const Perm&)>& visit);
void for_each_signed_perm(int n, const std::function<void(const SignedPerm&)>& visit);
/// Distinct rearrangements of the letters.
void for_each_multiset_perm(MultisetWord letters, const std::function<void(const MultisetWord&)>& visit);
/// Every e with 0 <= e_i < s_i in lex order.
void for_each_invseq(const SSeq& s, const std::function<void(const InvSeq&)>& visit);

/// Exponent list for one object: (variable, exponent) pairs.
using Weights = std::vector<std::pair<int, std::int64_t>>;

/// Sum over the stream of the product of var^exponent.
template <typename Obj>
SparsePoly distribution(const std::function<void(const std::function<void(const Obj&)>&)>& stream,
                        const std::function<Weights(const Obj&)>& weigh) {
  std::map<Monomial, Int, MonomialOrder> acc;
  std::vector<std::pair<int, int>> exps;
  stream([&](const Obj& o) {
    exps.clear();
    for (const auto& [v, e] : weigh(o)) exps.emplace_back(v, static_cast<int>(e));
    acc[Monomial::from_pairs(exps)] += 1;
  });
  SparsePoly p;
  for (const auto& [m, c] : acc) p.add_term(m, c);
  return p;
}

}  // namespace lhp
