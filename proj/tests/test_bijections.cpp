#include <doctest.h>

#include <set>

#include "lhp/bijections.hpp"
#include "lhp/statistics.hpp"
#include "oracles.hpp"

using namespace lhp;
using V = std::vector<std::int64_t>;

namespace {

Parts P(V v) { return Parts(v.begin(), v.end()); }

/// Members of G_n^(k,l) with weight <= N, filtered from a box.
std::vector<Parts> g_members(std::size_t n, KL kl, std::int64_t N) {
  const SSeq a = make_kl(kl.k, kl.l, n);
  std::vector<Parts> out;
  oracle::for_each_box(n, N, [&](const V& v) {
    if (oracle::sum(v) <= N && is_g_member(P(v), a)) out.push_back(P(v));
  });
  return out;
}

std::int64_t odd_sum(const Parts& p) {
  std::int64_t t = 0;
  for (std::size_t i = 0; i < p.size(); i += 2) t += p[i];
  return t;
}
std::int64_t even_sum(const Parts& p) {
  std::int64_t t = 0;
  for (std::size_t i = 1; i < p.size(); i += 2) t += p[i];
  return t;
}

}  // namespace

TEST_SUITE("bijections") {
  TEST_CASE("the gamma chain") {
    const KL kl{1, 4};
    CHECK(gamma(P({0}), 4, kl) == P({4, 0}));
    CHECK(gamma(P({4, 0}), 1, kl) == P({4, 4, 1}));
    CHECK(gamma(P({4, 4, 1}), 1, kl) == P({12, 4, 5, 1}));
    CHECK(gamma(P({12, 4, 5, 1}), 1, kl) == P({9, 12, 4, 5, 0}));
    CHECK(gamma_inv(P({4, 0}), kl) == std::pair{P({0}), std::int64_t{4}});
    CHECK(gamma_inv(P({4, 4, 1}), kl) == std::pair{P({4, 0}), std::int64_t{1}});
    CHECK(gamma_inv(P({9, 12, 4, 5, 0}), kl) == std::pair{P({12, 4, 5, 1}), std::int64_t{1}});
    CHECK_THROWS(gamma(P({0, 5}), 1, kl));
  }

  TEST_CASE("gamma round trips and weight law") {
    for (const KL kl : {KL{2, 2}, KL{1, 4}, KL{4, 1}, KL{3, 2}}) {
      for (std::size_t n = 2; n <= 4; ++n)
        for (const auto& mu : g_members(n, kl, 10)) {
          const auto [lam, s] = gamma_inv(mu, kl);
          CHECK(gamma(lam, s, kl) == mu);
          CHECK(even_sum(mu) == odd_sum(lam));
          const std::int64_t mult = n % 2 == 0 ? kl.l : kl.k;
          CHECK(odd_sum(mu) == mult * odd_sum(lam) - even_sum(lam) + s);
        }
    }
  }

  TEST_CASE("BME images") {
    CHECK(bme_to_string(P({12, 4, 5, 1}), {1, 4}) == "4^4 5^1 1^1");
    CHECK(bme_to_string(P({9, 12, 4, 5, 0}), {1, 4}) == "5^4 7^1 2^1 1^1");
    CHECK(bme(P({12, 4, 5, 1}), {1, 4}) == PartMultiplicity{{4, 4}, {5, 1}, {1, 1}});
    CHECK(bme(P({9, 12, 4, 5, 0}), {1, 4}) == PartMultiplicity{{5, 4}, {7, 1}, {2, 1}, {1, 1}});
    CHECK(bme(P({}), {1, 4}).empty());
    CHECK(bme_inv(PartMultiplicity{{4, 4}, {5, 1}, {1, 1}}, 4, {1, 4}) == P({12, 4, 5, 1}));
    CHECK(bme_inv(PartMultiplicity{{5, 4}, {7, 1}, {2, 1}, {1, 1}}, 5, {1, 4}) == P({9, 12, 4, 5, 0}));
    CHECK(bme_inv({}, 3, {2, 2}) == P({0, 0, 0}));
    CHECK_THROWS(bme_inv(PartMultiplicity{{6, 1}}, 3, {1, 4}));
  }

  TEST_CASE("BME is a weight-preserving bijection") {
    for (const KL kl : {KL{2, 2}, KL{1, 4}, KL{4, 1}}) {
      for (std::size_t n = 1; n <= 4; ++n) {
        std::set<PartMultiplicity> images;
        for (const auto& mu : g_members(n, kl, 12)) {
          const auto m = bme(mu, kl);
          std::int64_t w = 0;
          for (auto [part, mult] : m) w += part * mult;
          CHECK(w == oracle::sum(V(mu.begin(), mu.end())));
          CHECK(images.insert(m).second);
          CHECK(bme_inv(m, n, kl) == mu);
        }
        // per-weight counts against partitions into the allowed parts
        const auto values = bme_part_values(n, kl);
        const auto expect = oracle::product_counts(values, 12);
        std::vector<long> got(13, 0);
        for (const auto& mu : g_members(n, kl, 12)) ++got[static_cast<std::size_t>(oracle::sum(V(mu.begin(), mu.end())))];
        CHECK(got == expect);
      }
    }
  }

  TEST_CASE("theta insertion") {
    CHECK(theta({{3, 1}, {1, 1}}, 2) == P({3, 1}));
    CHECK(theta({}, 3).empty());
    CHECK(theta({{4, 1}}, 3) == P({3, 1}));
    CHECK_THROWS(theta({{2, 1}}, 2));
    for (std::int64_t l = 2; l <= 4; ++l) {
      const auto rep = theta_bijectivity_check(l, l == 2 ? 20 : 15);
      CHECK(rep.pass);
      CHECK(rep.inputs > 0);
    }
    CHECK(theta_bijectivity_check(3, 0).pass);
  }

  TEST_CASE("permutations and inversion sequences") {
    CHECK(perm_to_invseq({1, 2, 3}) == V{0, 0, 0});
    CHECK(perm_to_invseq({2, 1}) == V{0, 1});
    CHECK(perm_to_invseq({3, 1, 2}) == V{0, 1, 1});
    CHECK_THROWS(perm_to_invseq({1, 1}));
    for (int n = 1; n <= 7; ++n) {
      std::vector<std::int64_t> sv;
      for (int i = 1; i <= n; ++i) sv.push_back(i);
      const SSeq s = make_explicit(sv);
      for (const auto& p : oracle::perms(n)) {
        const auto e = perm_to_invseq(p);
        CHECK(invseq_to_perm(e) == p);
        CHECK(e.back() == n - p.back());
        CHECK(invseq_stats(e, s).asc == oracle::stats(p).des);
      }
    }
  }

  TEST_CASE("barred inversion sequences") {
    const SSeq s = make_explicit({5, 3});
    auto b = lhp_to_barred(P({0, 0}), s);
    CHECK(b.e == V{0, 0});
    CHECK(b.bars == V{0, 0});
    b = lhp_to_barred(P({2, 3}), s);
    CHECK(b.e == V{3, 0});
    CHECK(b.bars == V{1, 1});
    // e = (0, 1) ascends at position 1, so a bar is required there
    CHECK_THROWS(barred_to_lhp({{0, 1}, {0, 0}}, make_explicit({2, 3})));
    const SSeq t = make_explicit({2, 3});
    for (const auto& v : oracle::members_in_box({2, 3}, 15)) {
      if (oracle::sum(v) > 15) continue;
      const auto bb = lhp_to_barred(P(v), t);
      CHECK(barred_to_lhp(bb, t) == P(v));
      CHECK(bb.bars.back() == (v.back() + 2) / 3);
    }
  }
}
