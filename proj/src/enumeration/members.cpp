#include <algorithm>
#include <limits>

#include "lhp/enumeration.hpp"

namespace lhp {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

}  // namespace

bool is_member(const Parts& lambda, const SSeq& s) {
  if (lambda.size() != s.size()) throw std::invalid_argument("partition and sequence lengths differ");
  if (lambda.empty()) return true;
  if (lambda[0] < 0) return false;
  for (std::size_t i = 0; i + 1 < lambda.size(); ++i)
    if (static_cast<__int128>(lambda[i]) * s[i + 1] > static_cast<__int128>(lambda[i + 1]) * s[i]) return false;
  return true;
}

void for_each_member(const SSeq& s, const Bounds& bounds, const std::function<void(const Parts&)>& visit) {
  if (!bounds.max_weight && !bounds.max_last) throw std::invalid_argument("enumeration needs a weight or last-part bound");
  const std::size_t n = s.size();
  Parts lambda(n, 0);
  std::uint64_t count = 0;
  auto emit = [&] {
    if (bounds.max_items && ++count > *bounds.max_items)
      throw BudgetExceeded("enumeration budget of " + std::to_string(*bounds.max_items) + " members exceeded");
    visit(lambda);
  };
  if (n == 0) {
    emit();
    return;
  }
  const std::int64_t W = bounds.max_weight.value_or(std::numeric_limits<std::int64_t>::max() / 4);
  // Fill lambda[i] for i = n-1 down to 0.
  std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t i, std::int64_t rem) {
    std::int64_t hi = std::min(rem, floor_div(lambda[i + 1] * s[i], s[i + 1]));
    for (std::int64_t v = hi; v >= 0; --v) {
      lambda[i] = v;
      if (i == 0)
        emit();
      else
        rec(i - 1, rem - v);
    }
  };
  std::int64_t top = W;
  if (bounds.max_last) top = std::min(top, *bounds.max_last);
  for (std::int64_t v = top; v >= 0; --v) {
    lambda[n - 1] = v;
    if (n == 1)
      emit();
    else
      rec(n - 2, W - v);
  }
  lambda.assign(n, 0);
}

namespace {

std::vector<Parts> collect(const SSeq& s, const Bounds& b) {
  std::vector<Parts> out;
  for_each_member(s, b, [&](const Parts& p) { out.push_back(p); });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Parts> enumerate_weight(const SSeq& s, std::int64_t N) {
  if (N < 0) throw std::invalid_argument("negative weight bound");
  return collect(s, {N, std::nullopt, std::nullopt});
}

std::vector<Parts> enumerate_last(const SSeq& s, std::int64_t T) {
  if (T < 0) throw std::invalid_argument("negative last-part bound");
  return collect(s, {std::nullopt, T, std::nullopt});
}

StatBundle stats(const Parts& lambda, const SSeq& s) {
  if (!is_member(lambda, s)) throw std::invalid_argument("stats: not a lecture hall partition for this sequence");
  StatBundle b;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    const std::int64_t c = ceil_div(lambda[i], s[i]);
    const std::int64_t f = floor_div(lambda[i], s[i]);
    b.weight += lambda[i];
    b.ceil.push_back(c);
    b.ceil_sum += c;
    b.ceil_odd += c % 2;
    b.eps_plus.push_back(s[i] * c - lambda[i]);
    b.eps_sum += b.eps_plus.back();
    b.floor.push_back(f);
    b.floor_sum += f;
    b.floor_odd += f % 2;
  }
  if (!lambda.empty()) b.last = lambda.back();
  return b;
}

bool is_g_member(const Parts& lambda, const SSeq& a) { return is_member(Parts(lambda.rbegin(), lambda.rend()), a); }

GSums g_sums(const Parts& lambda) {
  GSums g;
  for (std::size_t i = 0; i < lambda.size(); ++i) (i % 2 == 0 ? g.odd : g.even) += lambda[i];
  return g;
}

void for_each_g_member(const SSeq& a, std::int64_t max_weight, const std::function<void(const Parts&)>& visit) {
  Parts rev;
  for_each_member(a, {max_weight, std::nullopt, std::nullopt}, [&](const Parts& p) {
    rev.assign(p.rbegin(), p.rend());
    visit(rev);
  });
}

std::vector<GfVar> default_gf_vars() {
  return {{Stat::weight, var::q}, {Stat::last_ceil, var::x}, {Stat::ceil_sum, var::u}, {Stat::ceil_odd, var::v}, {Stat::eps_sum, var::z}};
}

namespace {

std::int64_t stat_value(const StatBundle& b, Stat st) {
  switch (st) {
    case Stat::weight: return b.weight;
    case Stat::last_ceil: return b.ceil.empty() ? 0 : b.ceil.back();
    case Stat::ceil_sum: return b.ceil_sum;
    case Stat::ceil_odd: return b.ceil_odd;
    case Stat::eps_sum: return b.eps_sum;
    case Stat::floor_sum: return b.floor_sum;
    case Stat::floor_odd: return b.floor_odd;
    case Stat::last_part: return b.last;
  }
  return 0;
}

}  // namespace

TruncSeries multi_gf(const SSeq& s, const Caps& caps, const std::vector<GfVar>& vars) {
  Bounds bounds;
  const std::int64_t sn = s.size() ? s.values.back() : 1;
  auto tighten_last = [&](std::int64_t T) { bounds.max_last = bounds.max_last ? std::min(*bounds.max_last, T) : T; };
  for (const auto& gv : vars) {
    auto it = caps.find(gv.var);
    if (it == caps.end()) continue;
    const std::int64_t c = it->second;
    switch (gv.stat) {
      case Stat::weight:
        bounds.max_weight = bounds.max_weight ? std::min(*bounds.max_weight, c - 1) : c - 1;
        break;
      case Stat::last_ceil:
      case Stat::ceil_sum:
        tighten_last((c - 1) * sn);
        break;
      case Stat::floor_sum:
        tighten_last(c * sn - 1);
        break;
      case Stat::last_part:
        tighten_last(c - 1);
        break;
      default:
        break;
    }
  }
  if (s.size() == 0) bounds.max_weight = 0;
  if (!bounds.max_weight && !bounds.max_last)
    throw std::invalid_argument("multi_gf: the caps do not bound the enumeration");
  if (bounds.max_weight && *bounds.max_weight < 0) return {SparsePoly{}, caps};
  if (bounds.max_last && *bounds.max_last < 0) return {SparsePoly{}, caps};
  SparsePoly acc;
  std::vector<std::pair<int, int>> exps;
  for_each_member(s, bounds, [&](const Parts& p) {
    const StatBundle b = stats(p, s);
    exps.clear();
    for (const auto& gv : vars) exps.emplace_back(gv.var, static_cast<int>(stat_value(b, gv.stat)));
    Monomial m = Monomial::from_pairs(exps);
    if (below_caps(m, caps)) acc.add_term(m, 1);
  });
  return {acc, caps};
}

SSeq truncated_sequence(int n, int k, TruncMode mode) {
  if (k < 1 || k > n) throw std::invalid_argument("truncation needs 1 <= k <= n");
  std::vector<std::int64_t> v;
  for (int i = 0; i < k; ++i) v.push_back(mode == TruncMode::anti ? n - i : n - k + 1 + i);
  return make_explicit(v);
}

std::vector<Parts> enumerate_truncated(int n, int k, TruncMode mode, std::int64_t N) {
  auto all = enumerate_weight(truncated_sequence(n, k, mode), N);
  if (mode != TruncMode::exactly_k_positive) return all;
  std::vector<Parts> out;
  for (auto& p : all)
    if (p.front() > 0) out.push_back(std::move(p));
  return out;
}

std::vector<Int> enumerate_anti_At(std::int64_t t, std::int64_t N) {
  if (t < 1) throw std::invalid_argument("enumerate_anti_At needs t >= 1");
  std::vector<Int> counts(static_cast<std::size_t>(std::max<std::int64_t>(N, 0) + 1));
  if (N < 0) return {};
  counts[0] = 1;
  for (std::int64_t k = 1; k <= N; ++k) {
    // Parts lambda_1..lambda_k against s = (k, ..., 1); all parts >= 1.
    Parts lambda(static_cast<std::size_t>(k));
    std::function<void(std::int64_t, std::int64_t)> rec = [&](std::int64_t i, std::int64_t rem) {
      // lambda[i] with s_i = k - i; its right neighbour has s = k - i - 1.
      const std::int64_t hi = std::min(rem - i, floor_div(lambda[static_cast<std::size_t>(i + 1)] * (k - i), k - i - 1));
      for (std::int64_t v = 1; v <= hi; ++v) {
        lambda[static_cast<std::size_t>(i)] = v;
        if (i == 0)
          counts[static_cast<std::size_t>(N - rem + v)] += 1;
        else
          rec(i - 1, rem - v);
      }
    };
    for (std::int64_t v = 1; v <= std::min(t, N - (k - 1)); ++v) {
      lambda.back() = v;
      if (k == 1)
        counts[static_cast<std::size_t>(v)] += 1;
      else
        rec(k - 2, N - v);
    }
  }
  return counts;
}

}  // namespace lhp
