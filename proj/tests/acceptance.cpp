// Acceptance checks: one line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "lhp/algebra.hpp"
#include "lhp/bijections.hpp"
#include "lhp/enumeration.hpp"
#include "lhp/eulerian.hpp"
#include "lhp/geometry.hpp"
#include "lhp/harness.hpp"
#include "lhp/sequences.hpp"
#include "oracles.hpp"

using namespace lhp;
using V = std::vector<std::int64_t>;

namespace {

struct Check {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& why) {
    if (!ok && pass) {
      pass = false;
      detail = why;
    }
  }
};

std::string join(const V& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

V one_to(std::int64_t n) {
  V s(static_cast<std::size_t>(n));
  std::iota(s.begin(), s.end(), 1);
  return s;
}

// Runs each id through the suite; every case must PASS.
void require_suite(Check& c, const std::vector<std::string>& ids, std::string& summary) {
  for (const auto& id : ids) {
    const auto res = harness::run_suite({id, 1, 1});
    std::size_t passed = 0;
    for (const auto& r : res.reports) {
      if (r.status == harness::Status::PASS) {
        ++passed;
        continue;
      }
      c.require(false, id + " " + r.params.dump() + " " + harness::to_string(r.status) + ": " + r.notes);
    }
    c.require(!res.reports.empty(), id + " has no cases");
    summary += (summary.empty() ? "" : ", ") + id + " " + std::to_string(passed) + "/" + std::to_string(res.reports.size());
  }
}

std::vector<long> counts_by_weight(const std::vector<Parts>& members, std::int64_t N) {
  std::vector<long> c(static_cast<std::size_t>(N) + 1, 0);
  for (const auto& lam : members) {
    const auto w = std::accumulate(lam.begin(), lam.end(), std::int64_t{0});
    if (w <= N) ++c[static_cast<std::size_t>(w)];
  }
  return c;
}

Check lecture_hall_theorem() {
  Check c;
  for (std::int64_t n = 1; n <= 6; ++n) {
    V odd;
    for (std::int64_t i = 1; i <= n; ++i) odd.push_back(2 * i - 1);
    const auto got = counts_by_weight(enumerate_weight(make_explicit(one_to(n)), 30), 30);
    c.require(got == oracle::product_counts(odd, 30), "weight counts differ at n=" + std::to_string(n));
  }
  c.detail = c.pass ? "n=1..6 to q^30 match partitions into odd parts < 2n" : c.detail;
  return c;
}

Check anti_refined() {
  Check c;
  std::string summary;
  require_suite(c, {"ANTI", "REFINED_A"}, summary);
  std::int64_t max_n = 0;
  for (const auto& r : harness::run_suite({"REFINED_A", 1, 1}).reports) {
    c.require(r.params.value("caps", "") == "q=25,u=12,v=5", "REFINED_A caps differ: " + r.params.dump());
    max_n = std::max<std::int64_t>(max_n, r.params.value("n", 0));
  }
  c.require(max_n == 5, "REFINED_A stops at n=" + std::to_string(max_n));
  if (c.pass) c.detail = summary + " (caps q<25,u<12,v<5)";
  return c;
}

Check table_rows() {
  struct Row {
    V s;
    std::vector<long> coeffs;
    long listed_sum;
  };
  const std::vector<Row> rows{
      {{1, 2, 3, 4, 5, 6}, {1, 57, 302, 302, 57, 1}, 720},
      {{6, 5, 4, 3, 2, 1}, {1, 57, 302, 302, 57, 1}, 720},
      {{2, 4, 6, 8, 10}, {1, 237, 1682, 1682, 237, 1}, 3840},
      {{1, 3, 5, 7, 9, 11}, {1, 358, 3580, 5168, 1328, 32}, 10395},
      {{1, 4, 3, 8, 5, 12}, {1, 209, 1884, 2828, 811, 27}, 11520},
      {{1, 1, 3, 2, 5, 3}, {1, 20, 48, 20, 1}, 90},
      {{7, 2, 3, 5, 4, 6}, {1, 71, 948, 2450, 1411, 159}, 5040},
  };
  Check c;
  std::vector<SparsePoly> polys;
  std::string listed_note;
  for (const auto& row : rows) {
    const SSeq s = make_explicit(row.s);
    const auto e = s_eulerian(s);
    polys.push_back(e);
    const auto brute = oracle::ascent_polynomial(row.s);
    c.require(e == SparsePoly::from_dense(var::x, std::vector<Int>(brute.begin(), brute.end())),
              "row s=(" + join(row.s) + ") disagrees with brute force");
    // A printed row whose coefficients do not sum to the product of s cannot
    // be an ascent polynomial; it is reported rather than matched.
    const auto printed_sum = std::accumulate(row.coeffs.begin(), row.coeffs.end(), 0L);
    if (Int(printed_sum) != s.product()) {
      listed_note += " printed row (" + join(row.s) + ") sums to " + std::to_string(printed_sum) + ", computed " +
                     e.to_string() + ";";
      continue;
    }
    c.require(e == SparsePoly::from_dense(var::x, std::vector<Int>(row.coeffs.begin(), row.coeffs.end())),
              "row s=(" + join(row.s) + ") gives " + e.to_string());
    c.require(e.evaluate_all(1) == s.product(), "row s=(" + join(row.s) + ") sum is not the product");
    if (e.evaluate_all(1) != row.listed_sum)
      listed_note += " sum for (" + join(row.s) + ") is " + e.evaluate_all(1).get_str() + ", listed " +
                     std::to_string(row.listed_sum) + ";";
  }
  c.require(polys[0] == polys[1], "rows (1..6) and (6..1) differ");
  if (c.pass) c.detail = "7 rows match brute force, reversal equal, sums = product of s;" + listed_note;
  return c;
}

Check worked_example() {
  Check c;
  const SSeq s = make_explicit({2, 3});
  const std::vector<IntVec> pts{{0, 0}, {0, 1}, {0, 2}, {1, 2}, {1, 3}, {1, 4}};
  c.require(pi_points(s).points == pts, "parallelepiped points differ");
  const auto gf = lattice_gf(s);
  const int z1 = var::zi(1), z2 = var::zi(2);
  SparsePoly num;
  for (const auto& p : pts) num.add_term(Monomial{{z1, static_cast<int>(p[0])}, {z2, static_cast<int>(p[1])}}, 1);
  c.require(gf.numerator == num, "numerator is " + gf.numerator.to_string());

  const Caps caps{{var::q, 26}};
  const SparsePoly lq = gf.numerator.substitute(z1, Monomial::of(var::q)).substitute(z2, Monomial::of(var::q));
  TruncSeries l(lq, caps);
  for (const auto& d : gf.denominators) l = l.div_one_minus(Monomial::of(var::q, d.degree()));
  const auto expect = TruncSeries(SparsePoly(1) + SparsePoly::variable(var::q, 3), caps)
                          .div_one_minus(Monomial::of(var::q))
                          .div_one_minus(Monomial::of(var::q, 5));
  c.require(l.poly() == expect.poly(), "specialised series differs from (1+q^3)/((1-q)(1-q^5))");
  std::vector<long> series;
  for (int w = 0; w <= 25; ++w) series.push_back(l.coeff(Monomial::of(var::q, w)).get_si());
  c.require(series == oracle::weight_counts({2, 3}, 25), "series differs from brute-force counts");
  if (c.pass) c.detail = "6 points, numerator, series to q^25 match";
  return c;
}

Check bme_regression() {
  Check c;
  const KL kl{1, 4};
  c.require(gamma(Parts{0}, 4, kl) == Parts{4, 0}, "gamma step 1");
  c.require(gamma(Parts{4, 0}, 1, kl) == Parts{4, 4, 1}, "gamma step 2");
  c.require(gamma(Parts{4, 4, 1}, 1, kl) == Parts{12, 4, 5, 1}, "gamma step 3");
  c.require(gamma(Parts{12, 4, 5, 1}, 1, kl) == Parts{9, 12, 4, 5, 0}, "gamma step 4");
  const std::vector<std::pair<Parts, std::string>> images{
      {{0}, "1^0"},
      {{4, 0}, "5^0 1^4"},
      {{4, 4, 1}, "7^0 2^4 1^1"},
      {{12, 4, 5, 1}, "11^0 4^4 5^1 1^1"},
      {{9, 12, 4, 5, 0}, "13^0 5^4 7^1 2^1 1^1"},
  };
  for (const auto& [mu, text] : images) {
    const auto got = bme_to_string(mu, kl, true);
    c.require(got == text, "BME(" + join(V(mu.begin(), mu.end())) + ") = " + got + ", expected " + text);
  }

  const std::int64_t N = 15;
  std::uint64_t checked = 0;
  for (const KL k : {KL{2, 2}, KL{1, 4}, KL{4, 1}}) {
    for (std::size_t n = 1; n <= 4; ++n) {
      const SSeq a = make_kl(k.k, k.l, n);
      const auto values = bme_part_values(n, k);
      std::set<PartMultiplicity> seen;
      std::vector<long> got(static_cast<std::size_t>(N) + 1, 0);
      const std::string where = "(k,l)=(" + std::to_string(k.k) + "," + std::to_string(k.l) + ") n=" + std::to_string(n);
      oracle::for_each_box(n, N, [&](const V& v) {
        const auto w = oracle::sum(v);
        if (w > N || !is_g_member(Parts(v.begin(), v.end()), a)) return;
        ++checked;
        const Parts mu(v.begin(), v.end());
        const auto m = bme(mu, k);
        std::int64_t mw = 0;
        for (auto [part, mult] : m) {
          mw += part * mult;
          c.require(std::find(values.begin(), values.end(), part) != values.end(), "part outside range at " + where);
        }
        c.require(mw == w, "weight changed at " + where);
        c.require(seen.insert(m).second, "two inputs share an image at " + where);
        c.require(bme_inv(m, n, k) == mu, "inverse fails at " + where);
        ++got[static_cast<std::size_t>(w)];
      });
      c.require(got == oracle::product_counts(values, N), "per-weight counts differ at " + where);
    }
  }
  if (c.pass) c.detail = "gamma chain, 5 images verbatim, " + std::to_string(checked) + " inputs bijective";
  return c;
}

// Partitions into parts from `allowed` (each used at most `max_mult` times), weight <= N.
void for_each_partition(const V& allowed, std::size_t idx, std::int64_t room, std::int64_t max_mult, V& cur,
                        const std::function<void(const V&)>& visit) {
  if (idx == allowed.size()) {
    visit(cur);
    return;
  }
  const auto p = allowed[idx];
  for (std::int64_t m = 0; m * p <= room && m <= max_mult; ++m) {
    for_each_partition(allowed, idx + 1, room - m * p, max_mult, cur, visit);
    cur.push_back(p);
  }
  for (std::int64_t m = 0; m * p <= room && m <= max_mult; ++m) cur.pop_back();
}

Check theta_checks() {
  Check c;
  std::string summary;
  for (std::int64_t l = 2; l <= 4; ++l) {
    const auto rep = theta_bijectivity_check(l, 20);
    c.require(rep.pass, "l=" + std::to_string(l) + ": " + rep.note);
    summary += " l=" + std::to_string(l) + " " + std::to_string(rep.inputs) + " inputs;";
  }
  const std::int64_t N = 20;
  V odd, all;
  for (std::int64_t p = N; p >= 1; --p) {
    all.push_back(p);
    if (p % 2) odd.push_back(p);
  }
  std::map<std::int64_t, std::set<V>> images, distinct;
  V cur;
  for_each_partition(odd, 0, N, N, cur, [&](const V& parts) {
    PartMultiplicity m;
    for (auto p : parts) ++m[p];
    auto lam = theta(m, 2);
    V img(lam.begin(), lam.end());
    std::sort(img.rbegin(), img.rend());
    images[oracle::sum(parts)].insert(img);
  });
  for_each_partition(all, 0, N, 1, cur, [&](const V& parts) {
    V d = parts;
    std::sort(d.rbegin(), d.rend());
    distinct[oracle::sum(parts)].insert(d);
  });
  c.require(images == distinct, "l=2 images are not the distinct-part partitions");
  if (c.pass) c.detail = "N=20;" + summary + " l=2 images = distinct-part partitions";
  return c;
}

Check box_checks() {
  Check c;
  std::string summary;
  require_suite(c, {"BOX", "QBOX"}, summary);
  for (std::int64_t n = 1; n <= 5; ++n)
    for (std::int64_t t = 0; t <= 3; ++t)
      for (std::int64_t i = 0; i < n; ++i) {
        const auto k = t * n + i;
        long count = 0;
        for (const auto& v : oracle::members_in_box(one_to(n), k)) count += v.back() <= k;
        long expect = 1;
        for (std::int64_t j = 0; j < n - i; ++j) expect *= t + 1;
        for (std::int64_t j = 0; j < i; ++j) expect *= t + 2;
        c.require(count == expect, "brute-force count differs at n=" + std::to_string(n) + " t=" + std::to_string(t) +
                                       " i=" + std::to_string(i));
      }
  if (c.pass) c.detail = summary + "; brute-force counts agree";
  return c;
}

Check suite_check(const std::vector<std::string>& ids) {
  Check c;
  std::string summary;
  require_suite(c, ids, summary);
  if (c.pass) c.detail = summary;
  return c;
}

Check real_rooted() {
  Check c;
  for (const V& s : {V{1, 2, 3, 4, 5, 6}, V{6, 5, 4, 3, 2, 1}, V{2, 4, 6, 8, 10}, V{1, 3, 5, 7, 9, 11},
                     V{1, 4, 3, 8, 5, 12}, V{1, 1, 3, 2, 5, 3}, V{7, 2, 3, 5, 4, 6}})
    c.require(is_real_rooted(s_eulerian(make_explicit(s))), "not real-rooted: " + join(s));
  std::string summary;
  require_suite(c, {"REALROOT", "TYPED_FACTOR"}, summary);
  if (c.pass) c.detail = "table rows direct; " + summary;
  return c;
}

Check gorenstein() {
  Check c;
  c.require(gorenstein_check(make_explicit({3, 5})).c.has_value(), "(3,5) should be Gorenstein");
  c.require(!gorenstein_check(make_explicit({5, 2})).c.has_value(), "(5,2) should not be Gorenstein");
  const V fib{1, 1, 2, 3, 5, 8, 13};
  for (std::size_t n = 1; n <= fib.size(); ++n) {
    const bool gor = gorenstein_check(make_explicit(V(fib.begin(), fib.begin() + static_cast<std::ptrdiff_t>(n)))).c.has_value();
    c.require(gor == (n < 5), "Fibonacci prefix of length " + std::to_string(n));
  }
  for (std::int64_t l = 2; l <= 5; ++l)
    for (std::size_t n = 1; n <= 8; ++n)
      c.require(gorenstein_check(make_family(Family::ell, {l}, n)).c.has_value(),
                "l-sequence l=" + std::to_string(l) + " n=" + std::to_string(n));
  std::string summary;
  require_suite(c, {"GOR_EQUIV"}, summary);
  if (c.pass) c.detail = "named cases direct; " + summary;
  return c;
}

Check determinism() {
  Check c;
  const auto one = harness::run_suite({"*", 1, 1});
  const auto eight = harness::run_suite({"*", 8, 1});
  const auto a = harness::reports_to_json(one.reports);
  const auto b = harness::reports_to_json(eight.reports);
  c.require(a == b, "JSON differs between parallelism 1 and 8");
  if (c.pass) c.detail = std::to_string(one.reports.size()) + " reports, " + std::to_string(a.size()) + " bytes identical";
  return c;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Check()>>> criteria{
      {"LHT weight counts", lecture_hall_theorem},
      {"ANTI + REFINED_A", anti_refined},
      {"s-Eulerian table", table_rows},
      {"(2,3) parallelepiped example", worked_example},
      {"BME regression", bme_regression},
      {"Theta bijectivity", theta_checks},
      {"quadratic statistics", [] { return suite_check({"MAJBINV", "LHPDIST", "MAJSQIN", "JOHNSON", "QCOR", "UQCOR"}); }},
      {"BOX / QBOX", box_checks},
      {"inversion sequences", [] { return suite_check({"INVSEQ", "FULLSS"}); }},
      {"heights", [] { return suite_check({"HT_GF", "LHP_HT", "CHUNG_GRAHAM", "QDIVIDED", "AS_COINCIDE"}); }},
      {"real-rootedness", real_rooted},
      {"Gorenstein agreement", gorenstein},
      {"q-series identities",
       [] { return suite_check({"CSS", "NEW14", "NEW41", "GOLLNITZ14", "GOLLNITZ41", "GF_14", "GF_41"}); }},
      {"determinism", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    try {
      c = criteria[i].second();
    } catch (const std::exception& e) {
      c.pass = false;
      c.detail = std::string("exception: ") + e.what();
    }
    failed += !c.pass;
    std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << i + 1 << " " << criteria[i].first << ": " << c.detail << "\n";
  }
  std::cout << criteria.size() - static_cast<std::size_t>(failed) << "/" << criteria.size() << " criteria passed\n";
  return failed ? 1 : 0;
}
