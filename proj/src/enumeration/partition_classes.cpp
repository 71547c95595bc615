#include <algorithm>

#include "lhp/enumeration.hpp"

namespace lhp {

std::pair<std::int64_t, std::int64_t> odd_interval_bounds(std::int64_t n, std::int64_t k) {
  return {2 * ((k + 1) / 2) + 1, 2 * (n - k / 2) - 1};
}

namespace {

using Kind = PartitionClass::Kind;

bool is_multiset_class(Kind k) {
  return k == Kind::odd || k == Kind::odd_lt || k == Kind::mod_class || k == Kind::parts_from ||
         k == Kind::odd_interval;
}

std::vector<Int> coin_counts(const std::vector<std::int64_t>& parts, std::int64_t N) {
  std::vector<Int> c(static_cast<std::size_t>(N + 1));
  c[0] = 1;
  for (auto p : parts) {
    if (p <= 0) throw std::invalid_argument("partition parts must be positive");
    for (std::int64_t w = p; w <= N; ++w) c[static_cast<std::size_t>(w)] += c[static_cast<std::size_t>(w - p)];
  }
  return c;
}

std::vector<std::int64_t> allowed_parts(const PartitionClass& c, std::int64_t N) {
  std::vector<std::int64_t> out;
  switch (c.kind) {
    case Kind::odd:
      for (std::int64_t p = 1; p <= N; p += 2) out.push_back(p);
      break;
    case Kind::odd_lt:
      for (std::int64_t p = 1; p < c.a && p <= N; p += 2) out.push_back(p);
      break;
    case Kind::mod_class:
      if (c.a <= 0) throw std::invalid_argument("modulus must be positive");
      for (std::int64_t p = 1; p <= N; ++p)
        if (std::find(c.list.begin(), c.list.end(), p % c.a) != c.list.end()) out.push_back(p);
      break;
    case Kind::parts_from: {
      std::vector<std::int64_t> ps = c.list;
      std::sort(ps.begin(), ps.end());
      ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
      for (auto p : ps)
        if (p <= N) out.push_back(p);
      break;
    }
    default:
      break;
  }
  return out;
}

std::vector<Int> odd_interval_counts(std::int64_t n, std::int64_t k, std::int64_t N) {
  if (k < 1 || k > n) throw std::invalid_argument("odd_interval needs 1 <= k <= n");
  const auto [lo, hi] = odd_interval_bounds(n, k);
  const std::size_t cmax = static_cast<std::size_t>(k / 2);
  // dp[w][c]: partitions of w using c restricted parts.
  std::vector<std::vector<Int>> dp(static_cast<std::size_t>(N + 1), std::vector<Int>(cmax + 1));
  dp[0][0] = 1;
  for (std::int64_t p = 1; p < 2 * n && p <= N; p += 2) {
    const bool restricted = p >= lo && p <= hi;
    for (std::int64_t w = p; w <= N; ++w)
      for (std::size_t c = restricted ? 1 : 0; c <= cmax; ++c)
        dp[static_cast<std::size_t>(w)][c] += dp[static_cast<std::size_t>(w - p)][restricted ? c - 1 : c];
  }
  std::vector<Int> out(static_cast<std::size_t>(N + 1));
  for (std::size_t w = 0; w < out.size(); ++w)
    for (const auto& x : dp[w]) out[w] += x;
  return out;
}

// Whether part p may follow prev; pos is p's one-based position.
bool may_follow(const PartitionClass& c, std::int64_t prev, std::int64_t p, std::size_t pos) {
  switch (c.kind) {
    case Kind::distinct:
      return p < prev;
    case Kind::distinct_even_evenidx:
    case Kind::distinct_even_oddidx:
      return p < prev;
    case Kind::gollnitz_gap:
      return prev - p >= 2 && !(prev - p == 2 && prev % 2 == 1);
    case Kind::ratio_gt_c:
      return gt_c_ell(prev, p, c.a);
    case Kind::alt_ratio_21: {
      // prev / c_{pos-1} > p / c_pos with c = 2,1,2,1,...
      const std::int64_t cp = pos % 2 == 1 ? 2 : 1;
      const std::int64_t cprev = pos % 2 == 1 ? 1 : 2;
      return prev * cp > p * cprev;
    }
    case Kind::alt_ratio_12: {
      const std::int64_t cp = pos % 2 == 1 ? 1 : 2;
      const std::int64_t cprev = pos % 2 == 1 ? 2 : 1;
      return prev * cp > p * cprev;
    }
    default:
      return false;
  }
}

bool allowed_at(const PartitionClass& c, std::int64_t p, std::size_t pos) {
  switch (c.kind) {
    case Kind::distinct_even_evenidx:
      return pos % 2 == 1 || p % 2 == 0;
    case Kind::distinct_even_oddidx:
      return pos % 2 == 0 || p % 2 == 0;
    case Kind::gollnitz_gap:
      return !(c.flag && p == 1);
    case Kind::ratio_gt_c:
      if (c.a < 2) throw std::invalid_argument("ratio class needs l >= 2");
      return true;
    default:
      return true;
  }
}

}  // namespace

void for_each_sequence_in_class(const PartitionClass& c, std::int64_t N, const std::function<void(const Parts&)>& visit) {
  if (is_multiset_class(c.kind)) throw std::invalid_argument("multiset classes are counted, not listed");
  Parts seq;
  std::function<void(std::int64_t)> rec = [&](std::int64_t rem) {
    visit(seq);
    const std::size_t pos = seq.size() + 1;
    for (std::int64_t p = 1; p <= rem; ++p) {
      if (!allowed_at(c, p, pos)) continue;
      if (!seq.empty() && !may_follow(c, seq.back(), p, pos)) continue;
      seq.push_back(p);
      rec(rem - p);
      seq.pop_back();
    }
  };
  rec(N);
}

std::vector<Int> enumerate_partition_class(const PartitionClass& c, std::int64_t N) {
  if (N < 0) throw std::invalid_argument("negative weight bound");
  if (c.kind == Kind::odd_interval) return odd_interval_counts(c.a, c.b, N);
  if (is_multiset_class(c.kind)) return coin_counts(allowed_parts(c, N), N);
  std::vector<Int> out(static_cast<std::size_t>(N + 1));
  for_each_sequence_in_class(c, N, [&](const Parts& p) {
    std::int64_t w = 0;
    for (auto x : p) w += x;
    out[static_cast<std::size_t>(w)] += 1;
  });
  return out;
}

}  // namespace lhp
