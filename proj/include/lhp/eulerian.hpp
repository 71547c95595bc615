#pragma once

// s-Eulerian, inflated s-Eulerian and quotient polynomials by direct
// enumeration of inversion sequences, plus real-rootedness.

#include <cstdint>

#include "lhp/algebra.hpp"
#include "lhp/sequences.hpp"

namespace lhp {

enum class EulerianKind { E, Q, Q_divided, one_k };

struct EulerianResult {
  SparsePoly poly;  // in x
  SSeq sequence;
  EulerianKind kind;
};

/// Sum of x^{asc e} over I_n^(s).
SparsePoly s_eulerian(const SSeq& s);
/// Sum of x^{s_n asc e - e_n} over I_n^(s).
SparsePoly inflated_eulerian(const SSeq& s);
/// Sum over I_{n-1}^(s) of x^{s_n asc e - floor(s_n e_{n-1}/s_{n-1})}; asserts
/// that multiplying by 1 + ... + x^{s_n-1} gives inflated_eulerian(s).
SparsePoly inflated_divided(const SSeq& s);
SparsePoly one_k_eulerian(int n, std::int64_t k);

/// Distinct real roots of the square-free part equal its degree.
bool is_real_rooted(const SparsePoly& p, int var = var::x);

}  // namespace lhp
