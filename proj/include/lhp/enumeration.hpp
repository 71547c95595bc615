#pragma once

// Exhaustive generation of s-lecture hall partitions and related partition
// classes, their statistics, and multivariate generating series.

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "lhp/algebra.hpp"
#include "lhp/sequences.hpp"

namespace lhp {

using Parts = std::vector<std::int64_t>;

/// Raised when an enumeration would exceed its item budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Bounds {
  std::optional<std::int64_t> max_weight;
  std::optional<std::int64_t> max_last;
  std::optional<std::uint64_t> max_items;
};

/// 0 <= lambda_1/s_1 <= ... <= lambda_n/s_n, by cross-multiplication.
bool is_member(const Parts& lambda, const SSeq& s);

/// Visits every member within the bounds, walking from lambda_n down.
/// At least one of max_weight / max_last must be set.
void for_each_member(const SSeq& s, const Bounds& bounds, const std::function<void(const Parts&)>& visit);

/// Members with |lambda| <= N in lex order.
std::vector<Parts> enumerate_weight(const SSeq& s, std::int64_t N);
/// Members with lambda_n <= T in lex order.
std::vector<Parts> enumerate_last(const SSeq& s, std::int64_t T);

struct StatBundle {
  std::int64_t weight = 0;
  Parts ceil;  // ceil(lambda_i / s_i)
  std::int64_t ceil_sum = 0;
  std::int64_t ceil_odd = 0;  // odd entries of ceil
  Parts eps_plus;             // s_i ceil(lambda_i/s_i) - lambda_i
  std::int64_t eps_sum = 0;
  std::int64_t last = 0;
  Parts floor;  // floor(lambda_i / s_i)
  std::int64_t floor_sum = 0;
  std::int64_t floor_odd = 0;
};

/// Throws std::invalid_argument for non-members.
StatBundle stats(const Parts& lambda, const SSeq& s);

// Partitions in the reversed labelling lambda_1/a_n >= ... >= lambda_n/a_1 >= 0.
bool is_g_member(const Parts& lambda, const SSeq& a);
struct GSums {
  std::int64_t odd = 0;   // lambda_1 + lambda_3 + ...
  std::int64_t even = 0;  // lambda_2 + lambda_4 + ...
};
GSums g_sums(const Parts& lambda);
/// Members of G_n for the ambient a = (a_1..a_n), visited with bounded weight.
void for_each_g_member(const SSeq& a, std::int64_t max_weight, const std::function<void(const Parts&)>& visit);

enum class Stat { weight, last_ceil, ceil_sum, ceil_odd, eps_sum, floor_sum, floor_odd, last_part };

struct GfVar {
  Stat stat;
  int var;
};

/// q^|l| x^ceil(l_n/s_n) u^|ceil l| v^o(ceil l) z^|eps+|.
std::vector<GfVar> default_gf_vars();

/// Sum of the chosen statistics over all members, truncated by caps. The caps
/// must bound the enumeration through the weight, last-part or ceiling variables.
TruncSeries multi_gf(const SSeq& s, const Caps& caps, const std::vector<GfVar>& vars = default_gf_vars());

enum class TruncMode { at_most_k_positive, exactly_k_positive, anti };

/// Ambient sequence of the truncated family: (n-k+1..n) or (n..n-k+1) for anti.
SSeq truncated_sequence(int n, int k, TruncMode mode);
std::vector<Parts> enumerate_truncated(int n, int k, TruncMode mode, std::int64_t N);

struct PartitionClass {
  enum class Kind {
    distinct,
    odd,
    odd_lt,                 // odd parts < a
    odd_interval,           // truncated-theorem class for (n, k) = (a, b)
    distinct_even_evenidx,  // distinct, 2nd, 4th, ... parts even
    distinct_even_oddidx,   // distinct, 1st, 3rd, ... parts even
    mod_class,              // parts congruent to list mod a
    gollnitz_gap,           // gaps >= 2, no consecutive odd parts; flag: no ones
    ratio_gt_c,             // consecutive ratios > c_l, l = a
    parts_from,             // parts from list
    alt_ratio_21,           // l1/2 > l2/1 > l3/2 > ...
    alt_ratio_12,           // l1/1 > l2/2 > l3/1 > ...
  };
  Kind kind;
  std::int64_t a = 0;
  std::int64_t b = 0;
  bool flag = false;
  std::vector<std::int64_t> list;

  static PartitionClass distinct() { return {Kind::distinct, 0, 0, false, {}}; }
  static PartitionClass odd() { return {Kind::odd, 0, 0, false, {}}; }
  static PartitionClass odd_lt(std::int64_t bound) { return {Kind::odd_lt, bound, 0, false, {}}; }
  static PartitionClass odd_interval(std::int64_t n, std::int64_t k) { return {Kind::odd_interval, n, k, false, {}}; }
  static PartitionClass distinct_even_evenidx() { return {Kind::distinct_even_evenidx, 0, 0, false, {}}; }
  static PartitionClass distinct_even_oddidx() { return {Kind::distinct_even_oddidx, 0, 0, false, {}}; }
  static PartitionClass mod_class(std::int64_t m, std::vector<std::int64_t> residues) {
    return {Kind::mod_class, m, 0, false, std::move(residues)};
  }
  static PartitionClass gollnitz_gap(bool no_ones) { return {Kind::gollnitz_gap, 0, 0, no_ones, {}}; }
  static PartitionClass ratio_gt_c(std::int64_t l) { return {Kind::ratio_gt_c, l, 0, false, {}}; }
  static PartitionClass parts_from(std::vector<std::int64_t> parts) {
    return {Kind::parts_from, 0, 0, false, std::move(parts)};
  }
  static PartitionClass alt_ratio_21() { return {Kind::alt_ratio_21, 0, 0, false, {}}; }
  static PartitionClass alt_ratio_12() { return {Kind::alt_ratio_12, 0, 0, false, {}}; }
};

/// Truncated-theorem interval [lo, hi] of restricted odd parts for (n, k).
std::pair<std::int64_t, std::int64_t> odd_interval_bounds(std::int64_t n, std::int64_t k);

/// Counts by weight 0..N.
std::vector<Int> enumerate_partition_class(const PartitionClass& c, std::int64_t N);

/// Visits every sequence of a strict or distinct class (not the multiset
/// classes) with weight <= N, parts in order.
void for_each_sequence_in_class(const PartitionClass& c, std::int64_t N, const std::function<void(const Parts&)>& visit);

/// Counts by weight of positive-part anti-lecture hall compositions of any
/// length with last part at most t.
std::vector<Int> enumerate_anti_At(std::int64_t t, std::int64_t N);

}  // namespace lhp
