#pragma once

// Positive integer sequences s that parameterize lecture hall objects.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace lhp {

enum class Family { explicit_list, kl, ell, one_mod_k, arithmetic };

struct SSeq {
  std::vector<std::int64_t> values;
  Family family = Family::explicit_list;
  std::vector<std::int64_t> params;  // (k, l) for kl, (l) for ell, (k) otherwise

  std::size_t size() const { return values.size(); }
  std::int64_t operator[](std::size_t i) const { return values[i]; }
  /// One-based access matching the usual s_1..s_n labels.
  std::int64_t at1(std::size_t i) const { return values.at(i - 1); }
  std::int64_t product() const;
  SSeq reversed() const;
  SSeq prefix(std::size_t n) const;
  std::string to_string() const;
  friend bool operator==(const SSeq&, const SSeq&) = default;
};

/// Explicit sequence; every value must be positive.
SSeq make_explicit(std::vector<std::int64_t> values);

/// a_1 = 1, a_2 = l, a_{2i} = l a_{2i-1} - a_{2i-2}, a_{2i+1} = k a_{2i} - a_{2i-1}.
/// Throws std::domain_error naming the first nonpositive index.
SSeq make_kl(std::int64_t k, std::int64_t l, std::size_t n);

/// kl values allowing a_0 = 0 at index 0 and nonpositive terms (no check).
std::vector<std::int64_t> kl_terms_with_zero(std::int64_t k, std::int64_t l, std::size_t n);

SSeq make_family(Family family, const std::vector<std::int64_t>& params, std::size_t n);

struct RhoR {
  std::vector<std::int64_t> rho;
  std::vector<std::int64_t> r;
};

/// rho_i = a^{(k,l)}_i + a^{(l,k)}_{i-1}, r_i = a^{(l,k)}_i + a^{(k,l)}_{i-1}.
RhoR rho_r(std::int64_t k, std::int64_t l, std::size_t n);

/// x > c_l y exactly, with c_l the larger root of t^2 - l t + 1.
bool gt_c_ell(std::int64_t x, std::int64_t y, std::int64_t l);

/// "1,2,3", "kl:1,4:n=8", "ell:3:n=6", "1modk:2:n=6", "arith:2:n=5".
SSeq parse_sequence_spec(std::string_view spec);

}  // namespace lhp
