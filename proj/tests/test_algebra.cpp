#include <doctest.h>

#include <random>

#include "lhp/algebra.hpp"
#include "lhp/json_io.hpp"

using namespace lhp;

namespace {

SparsePoly qpoly(std::vector<long> c) {
  std::vector<Int> v(c.begin(), c.end());
  return SparsePoly::from_dense(var::q, v);
}
SparsePoly xpoly(std::vector<long> c) {
  std::vector<Int> v(c.begin(), c.end());
  return SparsePoly::from_dense(var::x, v);
}

SparsePoly random_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> e(0, 3), c(-5, 5), k(0, 4);
  SparsePoly p;
  for (int i = k(rng); i >= 0; --i) p.add_term(Monomial{{var::q, e(rng)}, {var::x, e(rng)}}, c(rng));
  return p;
}

}  // namespace

TEST_SUITE("algebra") {
  TEST_CASE("q-integers and q-binomials") {
    CHECK(q_int(0).is_zero());
    CHECK(q_int(1) == SparsePoly(1));
    CHECK(q_int(3) == qpoly({1, 1, 1}));
    CHECK(q_binomial(2, 1) == qpoly({1, 1}));
    CHECK(q_binomial(4, 2) == qpoly({1, 1, 2, 1, 1}));
    CHECK(q_binomial(5, 0) == SparsePoly(1));
    CHECK(q_binomial(2, 3).is_zero());
    for (int n = 0; n <= 8; ++n)
      for (int k = 0; k <= n; ++k) {
        mpz_class b;
        mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
        CHECK(q_binomial(n, k).evaluate_all(1) == b);
      }
  }

  TEST_CASE("pochhammer symbols") {
    const Caps caps{{var::q, 20}};
    CHECK(pochhammer({1, Monomial::of(var::q)}, var::q, 1, caps).poly() == qpoly({1, -1}));
    CHECK(pochhammer({-1, Monomial::of(var::q)}, var::q, 2, caps).poly() == qpoly({1, 1, 1, 1}));
    CHECK(pochhammer({1, Monomial::of(var::q)}, var::q, 0, caps).poly() == SparsePoly(1));
    CHECK_THROWS(pochhammer({1, Monomial::of(var::q)}, var::q, std::nullopt, Caps{}));
    // Euler's pentagonal numbers: (q;q)_inf = 1 - q - q^2 + q^5 + q^7 - q^12 - q^15
    const auto euler = pochhammer({1, Monomial::of(var::q)}, var::q, std::nullopt, caps).poly();
    SparsePoly pent = qpoly({1, -1, -1, 0, 0, 1, 0, 1});
    pent.add_term(Monomial::of(var::q, 12), -1);
    pent.add_term(Monomial::of(var::q, 15), -1);
    CHECK(euler == pent);
  }

  TEST_CASE("geometric inversion") {
    CHECK(invert_factor(Monomial::of(var::q), {{var::q, 4}}).poly() == qpoly({1, 1, 1, 1}));
    CHECK(invert_factor(Monomial::of(var::q, 3), {{var::q, 5}}).poly() == qpoly({1, 0, 0, 1}));
    const Monomial m{{var::zi(1), 2}, {var::zi(2), 3}};
    const Caps zc{{var::zi(1), 5}, {var::zi(2), 7}};
    const auto inv = invert_factor(m, zc);
    CHECK(inv.poly().size() == 3);
    CHECK(inv.coeff(m.pow(2)) == 1);
    CHECK_THROWS(invert_factor(Monomial{}, zc));
    CHECK_THROWS(invert_factor(Monomial::of(var::u), zc));
    // (1 - m) / (1 - m) = 1 under any caps
    for (int cap = 1; cap < 6; ++cap) {
      const Caps c{{var::q, cap}, {var::u, 3}};
      const Monomial f{{var::q, 2}, {var::u, 1}};
      CHECK(series_mul(invert_factor(f, c), TruncSeries(SparsePoly(1) - SparsePoly::monomial(f), c)).poly() == SparsePoly(1));
    }
  }

  TEST_CASE("series arithmetic") {
    const Caps c{{var::q, 10}};
    const TruncSeries a(qpoly({1, 1}), c), b(qpoly({1, -1}), c);
    CHECK(series_mul(a, b).poly() == qpoly({1, 0, -1}));
    CHECK(series_divide_exact(TruncSeries(qpoly({1, 0, -1}), c), b).poly() == qpoly({1, 1}));
    CHECK(series_divide_exact(a, TruncSeries(qpoly({1, 0, -1}), c)).poly() == qpoly({1, 1, 1, 1, 1, 1, 1, 1, 1, 1}));
    // caps merge to the componentwise minimum
    const TruncSeries small(qpoly({1, 1}), {{var::q, 2}, {var::u, 4}});
    CHECK(series_mul(a, small).caps() == Caps{{var::q, 2}, {var::u, 4}});
    CHECK(series_mul(a, small).poly() == qpoly({1, 2}));
    CHECK_THROWS_AS(divide_exact(qpoly({1, 1}), qpoly({1, 0, 1})), InexactDivision);
  }

  TEST_CASE("ring laws on random operands") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 50; ++i) {
      const auto a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      if (!b.is_zero()) CHECK(divide_exact(a * b, b) == a);
    }
  }

  TEST_CASE("palindromes") {
    CHECK(palindromic_center(xpoly({1, 3, 1}), var::x) == Palindrome{2, 1});
    CHECK_FALSE(palindromic_center(xpoly({1, 2}), var::x).has_value());
    CHECK(palindromic_center(xpoly({0, 1, -1}), var::x) == Palindrome{3, -1});
    // products of classical Eulerian polynomials
    const SparsePoly e3 = xpoly({1, 4, 1}), e4 = xpoly({1, 11, 11, 1});
    CHECK(palindromic_center(e3 * e4, var::x).has_value());
  }

  TEST_CASE("Sturm root counts") {
    auto rc = real_root_count(xpoly({2, -3, 1}), var::x);
    CHECK(rc.distinct_real_roots == 2);
    CHECK(rc.degree_squarefree == 2);
    rc = real_root_count(xpoly({1, 0, 1}), var::x);
    CHECK(rc.distinct_real_roots == 0);
    CHECK(rc.degree_squarefree == 2);
    CHECK(real_root_count(xpoly({1, 57, 302, 302, 57, 1}), var::x).real_rooted());
    // repeated roots: (x-1)^2 (x+2)
    const SparsePoly p = xpoly({-1, 1}) * xpoly({-1, 1}) * xpoly({2, 1});
    rc = real_root_count(p, var::x);
    CHECK(rc.distinct_real_roots == 2);
    CHECK(rc.degree_squarefree == 2);
    CHECK_THROWS(real_root_count(SparsePoly{}, var::x));
  }

  TEST_CASE("interpolation") {
    std::vector<std::pair<long, Int>> pts{{0, 1}, {1, 4}, {2, 9}};
    CHECK(interpolate(pts) == RationalPoly({1, 2, 1}));
    std::vector<std::pair<long, Int>> line{{0, 1}, {1, 2}};
    CHECK(interpolate(line) == RationalPoly({1, 1}));
    std::vector<std::pair<long, Int>> dup{{0, 1}, {0, 2}};
    CHECK_THROWS(interpolate(dup));
  }

  TEST_CASE("text and JSON forms") {
    CHECK(parse_caps("q=30,u=20,x=10") == Caps{{var::q, 30}, {var::x, 10}, {var::u, 20}});
    const SparsePoly p = qpoly({1, 0, 0, 3}) * SparsePoly::variable(var::x, 2);
    CHECK(poly_from_json(poly_to_json(p)) == p);
    const auto j = poly_to_json(qpoly({0, 5}));
    CHECK(j["terms"][0]["coeff"] == "5");
    CHECK(j["terms"][0]["exp"]["q"] == 1);
    const Monomial m{{var::zi(3), 2}, {var::q, 1}};
    CHECK(monomial_from_json(monomial_to_json(m)) == m);
  }
}
