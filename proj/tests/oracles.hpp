#pragma once

// Brute-force reference computations, written from the definitions and kept
// independent of the library's enumeration code.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <vector>

namespace oracle {

using Vec = std::vector<std::int64_t>;

/// Every vector in [0, bound]^n, in lex order.
inline void for_each_box(std::size_t n, std::int64_t bound, const std::function<void(const Vec&)>& visit) {
  Vec v(n, 0);
  while (true) {
    visit(v);
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (v[i] < bound) {
        ++v[i];
        std::fill(v.begin() + static_cast<std::ptrdiff_t>(i) + 1, v.end(), 0);
        break;
      }
      if (i == 0) return;
    }
    if (n == 0) return;
  }
}

/// 0 <= l_1/s_1 <= ... <= l_n/s_n with rational arithmetic.
inline bool lecture_hall(const Vec& l, const Vec& s) {
  mpq_class prev = 0;
  for (std::size_t i = 0; i < l.size(); ++i) {
    mpq_class r(static_cast<long>(l[i]), static_cast<long>(s[i]));
    r.canonicalize();
    if (r < prev) return false;
    prev = r;
  }
  return true;
}

/// Members with every part at most bound, filtered from the full box.
inline std::vector<Vec> members_in_box(const Vec& s, std::int64_t bound) {
  std::vector<Vec> out;
  for_each_box(s.size(), bound, [&](const Vec& v) {
    if (lecture_hall(v, s)) out.push_back(v);
  });
  return out;
}

inline std::int64_t sum(const Vec& v) {
  std::int64_t t = 0;
  for (auto x : v) t += x;
  return t;
}

/// Weight counts 0..N of members of L^(s).
inline std::vector<long> weight_counts(const Vec& s, std::int64_t N) {
  std::vector<long> c(static_cast<std::size_t>(N) + 1, 0);
  for (const auto& v : members_in_box(s, N))
    if (sum(v) <= N) ++c[static_cast<std::size_t>(sum(v))];
  return c;
}

/// Coefficients 0..N of prod 1/(1 - q^d) over the list (with repetition).
inline std::vector<long> product_counts(const Vec& ds, std::int64_t N) {
  std::vector<long> c(static_cast<std::size_t>(N) + 1, 0);
  c[0] = 1;
  for (auto d : ds)
    for (std::int64_t w = d; w <= N; ++w) c[static_cast<std::size_t>(w)] += c[static_cast<std::size_t>(w - d)];
  return c;
}

/// All permutations of 1..n by recursive insertion of n into each slot.
inline std::vector<std::vector<int>> perms(int n) {
  if (n == 0) return {{}};
  std::vector<std::vector<int>> out;
  for (const auto& p : perms(n - 1))
    for (std::size_t slot = 0; slot <= p.size(); ++slot) {
      auto q = p;
      q.insert(q.begin() + static_cast<std::ptrdiff_t>(slot), n);
      out.push_back(q);
    }
  return out;
}

struct Stats {
  long des = 0, maj = 0, inv = 0, exc = 0, cyc = 0, bin = 0, sq = 0;
};

/// des, maj, inv, exc, cyc and the quadratic sums bin = sum C(i+1,2), sq = sum i^2 over descents.
inline Stats stats(const std::vector<int>& p) {
  Stats st;
  const int n = static_cast<int>(p.size());
  for (int i = 1; i < n; ++i)
    if (p[i - 1] > p[i]) {
      ++st.des;
      st.maj += i;
      st.bin += static_cast<long>(i) * (i + 1) / 2;
      st.sq += static_cast<long>(i) * i;
    }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) st.inv += p[i] > p[j];
  for (int i = 0; i < n; ++i) st.exc += p[i] > i + 1;
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int i = 0; i < n; ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    ++st.cyc;
    for (int j = i; !seen[static_cast<std::size_t>(j)]; j = p[static_cast<std::size_t>(j)] - 1) seen[static_cast<std::size_t>(j)] = true;
  }
  return st;
}

/// Coefficients of the ascent polynomial of I_n^(s), e_0 = 0, s_0 = 1, by rationals.
inline std::vector<long> ascent_polynomial(const Vec& s) {
  std::vector<long> c(s.size() + 1, 0);
  Vec e(s.size(), 0);
  while (true) {
    int asc = 0;
    mpq_class prev = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
      mpq_class r(static_cast<long>(e[i]), static_cast<long>(s[i]));
      r.canonicalize();
      asc += prev < r;
      prev = r;
    }
    ++c[static_cast<std::size_t>(asc)];
    std::size_t i = s.size();
    while (i > 0 && e[i - 1] + 1 == s[i - 1]) e[--i] = 0;
    if (i == 0) break;
    ++e[i - 1];
  }
  while (c.size() > 1 && c.back() == 0) c.pop_back();
  return c;
}

/// Lattice points lambda = sum alpha_j v_j with 0 <= alpha_j < 1 and
/// v_j = (0, ..., 0, s_j, ..., s_n); alpha_i = l_i/s_i - l_{i-1}/s_{i-1}.
inline std::set<Vec> parallelepiped_points(const Vec& s) {
  std::set<Vec> out;
  const std::int64_t bound = static_cast<std::int64_t>(s.size()) * *std::max_element(s.begin(), s.end());
  for_each_box(s.size(), bound, [&](const Vec& l) {
    mpq_class prev = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
      mpq_class r(static_cast<long>(l[i]), static_cast<long>(s[i]));
      r.canonicalize();
      const mpq_class a = r - prev;
      if (a < 0 || a >= 1) return;
      prev = r;
    }
    out.insert(l);
  });
  return out;
}

/// Number of partitions of w into distinct parts, for w = 0..N.
inline std::vector<long> distinct_counts(std::int64_t N) {
  std::vector<long> c(static_cast<std::size_t>(N) + 1, 0);
  c[0] = 1;
  for (std::int64_t p = 1; p <= N; ++p)
    for (std::int64_t w = N; w >= p; --w) c[static_cast<std::size_t>(w)] += c[static_cast<std::size_t>(w - p)];
  return c;
}

}  // namespace oracle
