#include <doctest.h>

#include <functional>
#include <set>

#include "lhp/enumeration.hpp"
#include "oracles.hpp"

using namespace lhp;
using V = std::vector<std::int64_t>;

namespace {

std::vector<long> to_long(const std::vector<Int>& v) {
  std::vector<long> out;
  for (const auto& x : v) out.push_back(x.get_si());
  return out;
}

Parts P(V v) { return Parts(v.begin(), v.end()); }

}  // namespace

TEST_SUITE("enumeration") {
  TEST_CASE("membership") {
    const SSeq s = make_explicit({5, 3});
    CHECK(is_member(P({2, 3}), s));
    CHECK(is_member(P({3, 2}), s));
    CHECK_FALSE(is_member(P({5, 3, 2, 1}), make_explicit({4, 3, 2, 1})));
    CHECK(is_member(P({0, 0, 0}), make_explicit({7, 1, 2})));
    CHECK_THROWS(is_member(P({1}), s));
  }

  TEST_CASE("weight-bounded enumeration") {
    const auto m = enumerate_weight(make_explicit({1, 2}), 3);
    CHECK(m == std::vector<Parts>{P({0, 0}), P({0, 1}), P({0, 2}), P({0, 3}), P({1, 2})});
    CHECK(enumerate_weight(make_explicit({4, 1, 3}), 0) == std::vector<Parts>{P({0, 0, 0})});
    // against the brute-force box filter
    for (const V& s : {V{1, 2}, V{2, 3}, V{3, 1, 2}, V{1, 2, 3}, V{2, 2, 5}}) {
      std::set<Parts> lib;
      for (const auto& p : enumerate_weight(make_explicit(s), 12)) CHECK(lib.insert(p).second);
      std::set<Parts> brute;
      for (const auto& v : oracle::members_in_box(s, 12))
        if (oracle::sum(v) <= 12) brute.insert(P(v));
      CHECK(lib == brute);
    }
    // Lecture hall theorem at n = 2
    std::vector<long> counts(16, 0);
    for (const auto& p : enumerate_weight(make_explicit({1, 2}), 15)) ++counts[static_cast<std::size_t>(p[0] + p[1])];
    CHECK(counts == oracle::product_counts({1, 3}, 15));
  }

  TEST_CASE("last-part enumeration") {
    CHECK(enumerate_last(make_explicit({1, 2}), 2).size() == 4);
    CHECK(enumerate_last(make_explicit({1, 2}), 3).size() == 6);
    CHECK(enumerate_last(make_explicit({3, 5, 1}), 0).size() == 1);
    for (std::int64_t n = 1; n <= 4; ++n) {
      V s;
      for (std::int64_t i = 1; i <= n; ++i) s.push_back(i);
      for (std::int64_t t = 0; t <= 2; ++t)
        for (std::int64_t i = 0; i < n; ++i) {
          const auto T = t * n + i;
          std::size_t brute = 0;
          for (const auto& v : oracle::members_in_box(s, T)) brute += v.back() <= T;
          CHECK(enumerate_last(make_explicit(s), T).size() == brute);
        }
    }
  }

  TEST_CASE("statistics of a member") {
    const auto z = stats(P({0, 0}), make_explicit({5, 3}));
    CHECK(z.weight == 0);
    CHECK(z.ceil_sum == 0);
    CHECK(z.eps_sum == 0);
    const auto b = stats(P({2, 3}), make_explicit({5, 3}));
    CHECK(b.ceil == P({1, 1}));
    CHECK(b.ceil_sum == 2);
    CHECK(b.ceil_odd == 2);
    CHECK(b.eps_plus == P({3, 0}));
    CHECK(b.eps_sum == 3);
    CHECK(b.last == 3);
    CHECK_THROWS(stats(P({3, 2}), make_explicit({1, 2})));
  }

  TEST_CASE("multivariate generating series") {
    // refined lecture hall theorem, n = 3
    const Caps caps{{var::q, 14}, {var::u, 8}, {var::v, 4}};
    const auto lhs = multi_gf(make_explicit({1, 2, 3}), caps,
                              {{Stat::weight, var::q}, {Stat::ceil_sum, var::u}, {Stat::ceil_odd, var::v}});
    TruncSeries rhs = TruncSeries::one(caps);
    for (int i = 1; i <= 3; ++i)
      rhs = rhs.mul_one_minus(Monomial{{var::u, 1}, {var::v, 1}, {var::q, i}}, -1).div_one_minus(Monomial{{var::u, 2}, {var::q, 3 + i}});
    CHECK(lhs.poly() == rhs.poly());
    const auto tiny = multi_gf(make_explicit({1, 2}), {{var::q, 1}}, {{Stat::weight, var::q}});
    CHECK(tiny.poly() == SparsePoly(1));
    CHECK_THROWS(multi_gf(make_explicit({1, 2}), {{var::z, 3}}, {{Stat::eps_sum, var::z}}));
  }

  TEST_CASE("truncated families") {
    CHECK(truncated_sequence(5, 2, TruncMode::at_most_k_positive).values == V{4, 5});
    CHECK(truncated_sequence(5, 2, TruncMode::anti).values == V{5, 4});
    const auto all = enumerate_truncated(4, 4, TruncMode::at_most_k_positive, 10);
    CHECK(all == enumerate_weight(make_explicit({1, 2, 3, 4}), 10));
    for (const auto& p : enumerate_truncated(5, 3, TruncMode::exactly_k_positive, 12)) CHECK(p[0] > 0);
    CHECK_THROWS(enumerate_truncated(3, 4, TruncMode::anti, 5));
  }

  TEST_CASE("partition classes") {
    CHECK(enumerate_partition_class(PartitionClass::distinct(), 5)[5] == 3);
    CHECK(enumerate_partition_class(PartitionClass::odd(), 5)[5] == 3);
    CHECK(enumerate_partition_class(PartitionClass::distinct_even_evenidx(), 6)[6] == 3);
    CHECK(enumerate_partition_class(PartitionClass::mod_class(8, {1, 5, 6}), 6)[6] == 3);
    CHECK(to_long(enumerate_partition_class(PartitionClass::ratio_gt_c(2), 20)) == oracle::distinct_counts(20));
    CHECK(to_long(enumerate_partition_class(PartitionClass::distinct(), 20)) == oracle::distinct_counts(20));
    CHECK(to_long(enumerate_partition_class(PartitionClass::parts_from({1, 3}), 15)) == oracle::product_counts({1, 3}, 15));
  }

  TEST_CASE("anti-lecture hall compositions with bounded last part") {
    CHECK(enumerate_anti_At(2, 0)[0] == 1);
    // 0 < l_1/k <= l_2/(k-1) <= ... <= l_k/1 <= t, filtered from boxes
    for (std::int64_t t = 1; t <= 3; ++t) {
      const std::int64_t N = 9;
      std::vector<long> brute(static_cast<std::size_t>(N) + 1, 0);
      brute[0] = 1;
      // every composition of weight <= N into positive parts
      std::function<void(V&, std::int64_t)> grow = [&](V& v, std::int64_t left) {
        if (!v.empty()) {
          const auto k = static_cast<std::int64_t>(v.size());
          bool ok = v.back() <= t;
          for (std::int64_t i = 0; ok && i + 1 < k; ++i)
            ok = v[static_cast<std::size_t>(i)] * (k - i - 1) <= v[static_cast<std::size_t>(i + 1)] * (k - i);
          if (ok) ++brute[static_cast<std::size_t>(oracle::sum(v))];
        }
        for (std::int64_t x = 1; x <= left; ++x) {
          v.push_back(x);
          grow(v, left - x);
          v.pop_back();
        }
      };
      V start;
      grow(start, N);
      CHECK(to_long(enumerate_anti_At(t, N)) == brute);
    }
  }
}
