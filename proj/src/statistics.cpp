#include "lhp/statistics.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace lhp {

PermStats perm_stats(const Perm& pi) {
  const int n = static_cast<int>(pi.size());
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  for (int v : pi) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) throw std::invalid_argument("not a permutation of 1..n");
    seen[static_cast<std::size_t>(v)] = 1;
  }
  PermStats st;
  for (int i = 1; i < n; ++i) {
    if (pi[static_cast<std::size_t>(i - 1)] > pi[static_cast<std::size_t>(i)]) {
      st.Des.push_back(i);
      st.maj += i;
      st.comaj += n - i;
      st.bin += static_cast<std::int64_t>(i) * (i + 1) / 2;
      st.sq += static_cast<std::int64_t>(i) * i;
      // (i+1) + ... + n
      st.lhp += static_cast<std::int64_t>(n) * (n + 1) / 2 - static_cast<std::int64_t>(i) * (i + 1) / 2;
    }
  }
  st.des = static_cast<std::int64_t>(st.Des.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (pi[static_cast<std::size_t>(i)] > pi[static_cast<std::size_t>(j)]) ++st.inv;
  for (int i = 0; i < n; ++i)
    if (pi[static_cast<std::size_t>(i)] > i + 1) ++st.exc;
  std::vector<char> visited(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    if (visited[static_cast<std::size_t>(i)]) continue;
    ++st.cyc;
    for (int j = i; !visited[static_cast<std::size_t>(j)]; j = pi[static_cast<std::size_t>(j)] - 1)
      visited[static_cast<std::size_t>(j)] = 1;
  }
  st.binv = st.bin + st.inv;
  st.sqin = st.sq + st.inv;
  st.lhp -= st.inv;
  st.siz = (n + 1) * st.maj - st.sqin;
  return st;
}

std::vector<int> ascent_set(const InvSeq& e, const SSeq& s) {
  if (e.size() != s.size()) throw std::invalid_argument("inversion sequence and sequence lengths differ");
  std::vector<int> asc;
  std::int64_t prev_e = 0, prev_s = 1;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (static_cast<__int128>(prev_e) * s[i] < static_cast<__int128>(e[i]) * prev_s) asc.push_back(static_cast<int>(i));
    prev_e = e[i];
    prev_s = s[i];
  }
  return asc;
}

InvSeqStats invseq_stats(const InvSeq& e, const SSeq& s) {
  if (e.size() != s.size()) throw std::invalid_argument("inversion sequence and sequence lengths differ");
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] < 0 || e[i] >= s[i]) throw std::invalid_argument("entry e_" + std::to_string(i + 1) + " outside [0, s_i)");
  const auto n = static_cast<std::int64_t>(e.size());
  // tail[i] = s_{i+1} + ... + s_n in one-based terms, i.e. sum of s[i..n-1].
  std::vector<std::int64_t> tail(e.size() + 1, 0);
  for (std::size_t i = e.size(); i-- > 0;) tail[i] = tail[i + 1] + s[i];
  InvSeqStats st;
  st.Asc = ascent_set(e, s);
  st.asc = static_cast<std::int64_t>(st.Asc.size());
  st.weight = std::accumulate(e.begin(), e.end(), std::int64_t{0});
  st.lhp = -st.weight;
  for (int i : st.Asc) {
    st.amaj += n - i;
    st.lhp += tail[static_cast<std::size_t>(i)];
  }
  return st;
}

int des_signed(const SignedPerm& sigma, SignedFlavor flavor) {
  const std::size_t n = sigma.size();
  if (flavor == SignedFlavor::D && n < 2) throw std::invalid_argument("type D descents need n >= 2");
  int prev = flavor == SignedFlavor::B ? 0 : -sigma[1];
  int d = 0;
  for (int x : sigma) {
    if (prev > x) ++d;
    prev = x;
  }
  return d;
}

int des_multiset(const MultisetWord& w) {
  if (w.empty()) throw std::invalid_argument("empty word");
  int d = 0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] > w[i + 1]) ++d;
  return d;
}

void for_each_perm(int n, const std::function<void(const Perm&)>& visit) {
  Perm p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  do visit(p);
  while (std::next_permutation(p.begin(), p.end()));
}

void for_each_signed_perm(int n, const std::function<void(const SignedPerm&)>& visit) {
  SignedPerm sigma(static_cast<std::size_t>(n));
  for_each_perm(n, [&](const Perm& p) {
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      for (int i = 0; i < n; ++i) sigma[static_cast<std::size_t>(i)] = (mask >> i & 1u) ? -p[static_cast<std::size_t>(i)] : p[static_cast<std::size_t>(i)];
      visit(sigma);
    }
  });
}

void for_each_multiset_perm(MultisetWord letters, const std::function<void(const MultisetWord&)>& visit) {
  std::sort(letters.begin(), letters.end());
  do visit(letters);
  while (std::next_permutation(letters.begin(), letters.end()));
}

void for_each_invseq(const SSeq& s, const std::function<void(const InvSeq&)>& visit) {
  InvSeq e(s.size(), 0);
  for (;;) {
    visit(e);
    std::size_t i = e.size();
    while (i > 0) {
      --i;
      if (++e[i] < s[i]) break;
      e[i] = 0;
      if (i == 0) return;
    }
    if (e.empty()) return;
  }
}

}  // namespace lhp
