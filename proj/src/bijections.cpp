#include "lhp/bijections.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "lhp/statistics.hpp"

namespace lhp {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

}  // namespace

std::string multiplicity_to_string(const std::vector<std::pair<std::int64_t, std::int64_t>>& ordered,
                                   bool keep_zeros) {
  std::string out;
  for (const auto& [v, m] : ordered) {
    if (m == 0 && !keep_zeros) continue;
    if (!out.empty()) out += ' ';
    out += std::to_string(v) + "^" + std::to_string(m);
  }
  return out;
}

Parts gamma(const Parts& lambda, std::int64_t s, KL kl) {
  const std::size_t n = lambda.size() + 1;
  if (s < 0) throw std::invalid_argument("gamma: s must be nonnegative");
  if (n > 1 && !is_g_member(lambda, make_kl(kl.k, kl.l, n - 1)))
    throw std::invalid_argument("gamma: lambda is not in G_" + std::to_string(n - 1));
  make_kl(kl.k, kl.l, n);
  const auto a = kl_terms_with_zero(kl.k, kl.l, n);
  // one-based access into lambda
  auto lam = [&](std::size_t i) { return lambda[i - 1]; };
  Parts mu(n, 0);
  mu[0] = (n == 1 ? 0 : ceil_div(a[n] * lam(1), a[n - 1])) + s;
  for (std::size_t t = 1; 2 * t <= n; ++t) mu[2 * t - 1] = lam(2 * t - 1);
  for (std::size_t t = 1; 2 * t + 1 <= n; ++t) {
    const std::int64_t fl = floor_div(a[n - 2 * t] * lam(2 * t - 1), a[n - 2 * t + 1]);
    if (2 * t + 1 < n)
      mu[2 * t] = ceil_div(a[n - 2 * t] * lam(2 * t + 1), a[n - 2 * t - 1]) + fl - lam(2 * t);
    else
      mu[2 * t] = fl - lam(2 * t);
  }
  return mu;
}

std::pair<Parts, std::int64_t> gamma_inv(const Parts& mu, KL kl) {
  const std::size_t n = mu.size();
  if (n == 0) throw std::invalid_argument("gamma_inv: empty partition has no preimage");
  if (!is_g_member(mu, make_kl(kl.k, kl.l, n))) throw std::invalid_argument("gamma_inv: mu is not in G_" + std::to_string(n));
  const auto a = kl_terms_with_zero(kl.k, kl.l, n);
  Parts lambda(n - 1, 0);
  for (std::size_t t = 1; 2 * t <= n; ++t) lambda[2 * t - 2] = mu[2 * t - 1];
  // Even entries, solved from the odd entries of mu; each needs only odd lambda.
  for (std::size_t t = 1; 2 * t + 1 <= n; ++t) {
    const std::int64_t fl = floor_div(a[n - 2 * t] * lambda[2 * t - 2], a[n - 2 * t + 1]);
    std::int64_t v = fl - mu[2 * t];
    if (2 * t + 1 < n) v += ceil_div(a[n - 2 * t] * lambda[2 * t], a[n - 2 * t - 1]);
    lambda[2 * t - 1] = v;
  }
  const std::int64_t s = n == 1 ? mu[0] : mu[0] - ceil_div(a[n] * lambda[0], a[n - 1]);
  if (s < 0 || (n > 1 && !is_g_member(lambda, make_kl(kl.k, kl.l, n - 1))) || gamma(lambda, s, kl) != mu)
    throw std::logic_error("gamma_inv: recovered pair does not map back to mu");
  return {lambda, s};
}

std::vector<std::int64_t> bme_positions(const Parts& mu, KL kl) {
  if (mu.empty()) return {};
  auto [lambda, s] = gamma_inv(mu, kl);
  auto inner = bme_positions(lambda, kl);
  std::vector<std::int64_t> out{s};
  out.insert(out.end(), inner.begin(), inner.end());
  return out;
}

Parts bme_inv_positions(const std::vector<std::int64_t>& mults, KL kl) {
  if (mults.empty()) return {};
  for (auto m : mults)
    if (m < 0) throw std::invalid_argument("negative multiplicity");
  Parts lambda = bme_inv_positions(std::vector<std::int64_t>(mults.begin() + 1, mults.end()), kl);
  return gamma(lambda, mults.front(), kl);
}

std::vector<std::int64_t> bme_part_values(std::size_t n, KL kl) {
  if (n == 0) return {};
  auto rr = rho_r(kl.k, kl.l, n);
  return n % 2 == 0 ? rr.rho : rr.r;
}

PartMultiplicity bme(const Parts& mu, KL kl) {
  const auto pos = bme_positions(mu, kl);
  const auto values = bme_part_values(mu.size(), kl);
  PartMultiplicity out;
  for (std::size_t i = 0; i < pos.size(); ++i)
    if (pos[i] != 0) out[values[i]] += pos[i];
  return out;
}

Parts bme_inv(const PartMultiplicity& m, std::size_t n, KL kl) {
  const auto values = bme_part_values(n, kl);
  if (std::set<std::int64_t>(values.begin(), values.end()).size() != values.size())
    throw std::domain_error("BME part values repeat; multiplicities are ambiguous");
  std::vector<std::int64_t> pos(n, 0);
  for (const auto& [v, c] : m) {
    auto it = std::find(values.begin(), values.end(), v);
    if (it == values.end()) throw std::invalid_argument("part " + std::to_string(v) + " is not a BME part for n=" + std::to_string(n));
    pos[static_cast<std::size_t>(it - values.begin())] = c;
  }
  return bme_inv_positions(pos, kl);
}

std::string bme_to_string(const Parts& mu, KL kl, bool keep_zeros) {
  const auto pos = bme_positions(mu, kl);
  const auto values = bme_part_values(mu.size(), kl);
  std::vector<std::pair<std::int64_t, std::int64_t>> ordered;
  for (std::size_t i = pos.size(); i-- > 0;) ordered.emplace_back(values[i], pos[i]);
  return multiplicity_to_string(ordered, keep_zeros);
}

namespace {

struct ThetaTable {
  std::int64_t l;
  std::vector<std::int64_t> a;  // a_0 = 0, a_1 = 1, ...
  std::vector<std::int64_t> p;  // p[k] = a_k + a_{k-1}, p[0] unused

  ThetaTable(std::int64_t ell, std::int64_t max_part) : l(ell), a{0, 1}, p{0, 1} {
    if (ell < 2) throw std::invalid_argument("theta needs l >= 2");
    while (p.back() <= max_part) {
      a.push_back(l * a.back() - a[a.size() - 2]);
      p.push_back(a.back() + a[a.size() - 2]);
      // l = 2 gives p_k = 2k-1, which grows; every l >= 2 is increasing.
    }
  }

  std::size_t index_of(std::int64_t value) const {
    auto it = std::find(p.begin() + 1, p.end(), value);
    if (it == p.end()) throw std::invalid_argument(std::to_string(value) + " is not of the form a_k + a_{k-1}");
    return static_cast<std::size_t>(it - p.begin());
  }

  void insert(Parts& lam, std::size_t k, std::size_t j) const {
    if (lam.size() < j + 2) lam.resize(j + 2, 0);
    if (k == 1) {
      lam[j] += a[1];
      return;
    }
    const std::int64_t d1 = a[k] - a[k - 1];
    const std::int64_t d2 = a[k - 1] - a[k - 2];
    if (gt_c_ell(lam[j] + d1, lam[j + 1] + d2, l)) {
      lam[j] += d1;
      lam[j + 1] += d2;
      insert(lam, k - 1, j + 2);
    } else {
      lam[j] += a[k];
      lam[j + 1] += a[k - 1];
    }
  }
};

void trim(Parts& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

/// Multisets of parts from values (descending), weight <= N.
void for_each_multiset(const std::vector<std::int64_t>& values, std::int64_t N,
                       const std::function<void(const PartMultiplicity&)>& visit) {
  PartMultiplicity cur;
  std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t i, std::int64_t rem) {
    if (i == values.size()) {
      visit(cur);
      return;
    }
    const std::int64_t v = values[i];
    for (std::int64_t c = 0; c * v <= rem; ++c) {
      if (c > 0) cur[v] = c;
      rec(i + 1, rem - c * v);
    }
    cur.erase(v);
  };
  rec(0, N);
}

std::int64_t weight_of(const PartMultiplicity& m) {
  std::int64_t w = 0;
  for (const auto& [v, c] : m) w += v * c;
  return w;
}

}  // namespace

Parts theta(const PartMultiplicity& mu, std::int64_t l) {
  const std::int64_t max_part = mu.empty() ? 1 : mu.rbegin()->first;
  ThetaTable tab(l, max_part);
  Parts lam;
  for (auto it = mu.rbegin(); it != mu.rend(); ++it) {
    if (it->second < 0) throw std::invalid_argument("negative multiplicity");
    const std::size_t k = tab.index_of(it->first);
    for (std::int64_t c = 0; c < it->second; ++c) tab.insert(lam, k, 0);
  }
  trim(lam);
  return lam;
}

ThetaReport theta_bijectivity_check(std::int64_t l, std::int64_t N) {
  ThetaTable tab(l, N);
  std::vector<std::int64_t> values;
  for (std::size_t k = tab.p.size(); k-- > 1;)
    if (tab.p[k] <= N) values.push_back(tab.p[k]);
  ThetaReport rep;
  std::set<Parts> images;
  std::vector<Int> counts(static_cast<std::size_t>(N) + 1, 0);
  for_each_multiset(values, N, [&](const PartMultiplicity& mu) {
    ++rep.inputs;
    const Parts lam = theta(mu, l);
    std::int64_t w = 0;
    for (auto x : lam) w += x;
    if (w != weight_of(mu)) rep.weights_preserved = false;
    bool ok = true;
    for (std::size_t i = 0; i < lam.size(); ++i) {
      if (lam[i] <= 0) ok = false;
      if (i + 1 < lam.size() && !gt_c_ell(lam[i], lam[i + 1], l)) ok = false;
    }
    if (!ok) rep.images_in_target = false;
    if (!images.insert(lam).second) rep.injective = false;
    if (w >= 0 && w <= N) counts[static_cast<std::size_t>(w)] += 1;
  });
  const auto target = enumerate_partition_class(PartitionClass::ratio_gt_c(l), N);
  rep.counts_match = target == counts;
  rep.pass = rep.weights_preserved && rep.images_in_target && rep.injective && rep.counts_match;
  if (!rep.weights_preserved) rep.note += "weight changed; ";
  if (!rep.images_in_target) rep.note += "image outside target; ";
  if (!rep.injective) rep.note += "two inputs share an image; ";
  if (!rep.counts_match) rep.note += "per-weight counts differ; ";
  return rep;
}

ThetaBmeProbe theta_bme_probe(std::int64_t l, std::size_t n, std::int64_t N) {
  const auto values = bme_part_values(n, {l, l});
  std::vector<std::int64_t> desc(values.rbegin(), values.rend());
  ThetaBmeProbe probe;
  for_each_multiset(desc, N, [&](const PartMultiplicity& mu) {
    Parts via_bme = bme_inv(mu, n, {l, l});
    trim(via_bme);
    ++probe.compared;
    if (via_bme == theta(mu, l)) ++probe.agreed;
  });
  return probe;
}

std::vector<std::int64_t> perm_to_invseq(const Perm& pi) {
  std::vector<bool> seen(pi.size() + 1, false);
  for (int v : pi) {
    if (v < 1 || v > static_cast<int>(pi.size()) || seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("not a permutation of 1..n");
    seen[static_cast<std::size_t>(v)] = true;
  }
  std::vector<std::int64_t> e(pi.size(), 0);
  for (std::size_t i = 0; i < pi.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (pi[j] > pi[i]) ++e[i];
  return e;
}

Perm invseq_to_perm(const std::vector<std::int64_t>& e) {
  const std::size_t n = e.size();
  std::vector<int> remaining(n);
  for (std::size_t i = 0; i < n; ++i) remaining[i] = static_cast<int>(i) + 1;
  Perm pi(n);
  for (std::size_t i = n; i-- > 0;) {
    if (e[i] < 0 || e[i] > static_cast<std::int64_t>(i)) throw std::invalid_argument("e_" + std::to_string(i + 1) + " out of range");
    // remaining is ascending; the (e_i+1)-th largest sits e_i from the back
    const std::size_t idx = remaining.size() - 1 - static_cast<std::size_t>(e[i]);
    pi[i] = remaining[idx];
    remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(idx));
  }
  return pi;
}

BarredInvSeq lhp_to_barred(const Parts& lambda, const SSeq& s) {
  if (!is_member(lambda, s)) throw std::invalid_argument("not an s-lecture hall partition");
  BarredInvSeq out;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    const std::int64_t b = ceil_div(lambda[i], s[i]);
    out.bars.push_back(b);
    out.e.push_back(s[i] * b - lambda[i]);
  }
  return out;
}

Parts barred_to_lhp(const BarredInvSeq& b, const SSeq& s) {
  const std::size_t n = s.size();
  if (b.e.size() != n || b.bars.size() != n) throw std::invalid_argument("barred sequence has the wrong length");
  for (std::size_t i = 0; i < n; ++i)
    if (b.e[i] < 0 || b.e[i] >= s[i]) throw std::invalid_argument("e_" + std::to_string(i + 1) + " outside [0, s_i)");
  std::int64_t prev = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (b.bars[i] < prev) throw std::invalid_argument("bars decrease at position " + std::to_string(i + 1));
    prev = b.bars[i];
  }
  for (int i : ascent_set(b.e, s)) {
    const std::int64_t before = i == 0 ? 0 : b.bars[static_cast<std::size_t>(i - 1)];
    if (b.bars[static_cast<std::size_t>(i)] <= before)
      throw std::invalid_argument("ascent at " + std::to_string(i) + " has no bar");
  }
  Parts lambda(n);
  for (std::size_t i = 0; i < n; ++i) lambda[i] = s[i] * b.bars[i] - b.e[i];
  return lambda;
}

}  // namespace lhp
