#include <set>

#include "lhp/bijections.hpp"
#include "lhp/enumeration.hpp"
#include "theorems.hpp"

namespace lhp::harness::detail {

namespace {

Monomial mono(std::initializer_list<std::pair<int, int>> e) { return Monomial(e); }
Monomial qpow(std::int64_t e) { return Monomial::of(var::q, static_cast<int>(e)); }

std::vector<Int> weight_counts(const std::vector<Parts>& ps, std::int64_t N) {
  std::vector<Int> c(static_cast<std::size_t>(N) + 1, 0);
  for (const auto& p : ps) {
    std::int64_t w = 0;
    for (auto x : p) w += x;
    if (w <= N) c[static_cast<std::size_t>(w)] += 1;
  }
  return c;
}

SparsePoly weight_gf(const SSeq& s, const Caps& caps) {
  return multi_gf(s, caps, {{Stat::weight, var::q}}).poly();
}

std::vector<Params> range_cases(const char* key, std::int64_t lo, std::int64_t hi) {
  std::vector<Params> v;
  for (auto i = lo; i <= hi; ++i) v.push_back({{key, i}});
  return v;
}

std::vector<Params> nk_cases(std::int64_t max_n, const std::vector<std::string>& forms) {
  std::vector<Params> v;
  for (std::int64_t n = 1; n <= max_n; ++n)
    for (std::int64_t k = 1; k <= n; ++k) {
      if (forms.empty())
        v.push_back({{"n", n}, {"k", k}});
      else
        for (const auto& f : forms) v.push_back({{"n", n}, {"k", k}, {"form", f}});
    }
  return v;
}

/// Graded weight monomial x^o y^e t^{o+e}.
Monomial graded(std::int64_t o, std::int64_t e) {
  return mono({{var::x, static_cast<int>(o)}, {var::y, static_cast<int>(e)}, {var::t, static_cast<int>(o + e)}});
}

SparsePoly graded_sequences(const PartitionClass& c, std::int64_t N) {
  SparsePoly p;
  for_each_sequence_in_class(c, N, [&](const Parts& lam) {
    const auto g = g_sums(lam);
    p.add_term(graded(g.odd, g.even), 1);
  });
  return p;
}

Outcome count_identity(const PartitionClass& a, const PartitionClass& b, const Caps& caps, const std::string& ld,
                       const std::string& rd) {
  const std::int64_t N = cap_of(caps, var::q) - 1;
  return compare_polys(counts_poly(enumerate_partition_class(a, N), var::q),
                       counts_poly(enumerate_partition_class(b, N), var::q), caps, ld, rd);
}

SparsePoly refined_trunc_enumeration(int n, int k, bool anti, const Caps& caps) {
  const auto mode = anti ? TruncMode::anti : TruncMode::exactly_k_positive;
  const SSeq s = truncated_sequence(n, k, mode);
  SparsePoly p;
  for (const auto& lam : enumerate_truncated(n, k, mode, cap_of(caps, var::q) - 1)) {
    const auto b = stats(lam, s);
    const auto uexp = anti ? b.floor_sum : b.ceil_sum;
    const auto vexp = anti ? b.floor_odd : b.ceil_odd;
    Monomial m = mono({{var::q, static_cast<int>(b.weight)}, {var::u, static_cast<int>(uexp)}, {var::v, static_cast<int>(vexp)}});
    if (below_caps(m, caps)) p.add_term(m, 1);
  }
  return p;
}

void add_q_series(std::vector<Entry>& out) {
  out.push_back({"LHT", "sum over L_n of q^|lambda| by enumeration", "prod_{i=1..n} 1/(1-q^{2i-1})", false,
                 {{var::q, 30}}, [](std::uint64_t) { return range_cases("n", 1, 6); },
                 [](const Params& p, const Caps& caps) {
                   const auto n = get_int(p, "n");
                   std::vector<Monomial> f;
                   for (std::int64_t i = 1; i <= n; ++i) f.push_back(qpow(2 * i - 1));
                   return compare_polys(weight_gf(one_to_n(n), caps), product_inverse(f, caps).poly(), caps,
                                        "enumeration of L_n", "prod 1/(1-q^{2i-1})");
                 }});

  out.push_back({"ANTI", "sum over A_n of q^|lambda| by enumeration", "prod_{i=1..n} (1+q^i)/(1-q^{i+1})", false,
                 {{var::q, 30}}, [](std::uint64_t) { return range_cases("n", 1, 6); },
                 [](const Params& p, const Caps& caps) {
                   const auto n = get_int(p, "n");
                   TruncSeries r = TruncSeries::one(caps);
                   for (std::int64_t i = 1; i <= n; ++i) r = r.mul_one_minus(qpow(i), -1).div_one_minus(qpow(i + 1));
                   return compare_polys(weight_gf(n_to_one(n), caps), r.poly(), caps, "enumeration of A_n",
                                        "prod (1+q^i)/(1-q^{i+1})");
                 }});

  out.push_back({"CHEN", "anti-lecture hall compositions of any length, positive parts, last part <= t",
                 "(-q;q)_inf/(q;q)_inf (q,q^{t+1},q^{t+2};q^{t+2})_inf", true, {{var::q, 30}},
                 [](std::uint64_t) { return range_cases("t", 1, 5); },
                 [](const Params& p, const Caps& caps) {
                   const auto t = get_int(p, "t");
                   const Monomial q = qpow(1), step = qpow(t + 2);
                   TruncSeries r = TruncSeries::one(caps);
                   r = times_pochhammer(r, q, q, std::nullopt, -1, false);
                   r = times_pochhammer(r, q, q, std::nullopt, 1, true);
                   r = times_pochhammer(r, q, step, std::nullopt, 1, false);
                   r = times_pochhammer(r, qpow(t + 1), step, std::nullopt, 1, false);
                   r = times_pochhammer(r, step, step, std::nullopt, 1, false);
                   return compare_polys(counts_poly(enumerate_anti_At(t, cap_of(caps, var::q) - 1), var::q), r.poly(),
                                        caps, "enumeration of A_t", "overpartition product");
                 }});

  out.push_back({"TRUNC", "L_{n,k} counts by enumeration",
                 "odd parts < 2n, at most floor(k/2) from [2ceil(k/2)+1, 2(n-floor(k/2))-1]", false,
                 {{var::q, 30}}, [](std::uint64_t) { return nk_cases(5, {}); },
                 [](const Params& p, const Caps& caps) {
                   const auto n = get_int(p, "n"), k = get_int(p, "k");
                   const auto N = cap_of(caps, var::q) - 1;
                   auto lhs = weight_counts(enumerate_truncated(static_cast<int>(n), static_cast<int>(k), TruncMode::at_most_k_positive, N), N);
                   auto rhs = enumerate_partition_class(PartitionClass::odd_interval(n, k), N);
                   const auto [lo, hi] = odd_interval_bounds(n, k);
                   Outcome o = compare_polys(counts_poly(lhs, var::q), counts_poly(rhs, var::q), caps,
                                             "enumeration of L_{n,k}", "restricted odd partitions");
                   o.notes = "restricted interval [" + std::to_string(lo) + ", " + std::to_string(hi) + "]";
                   return o;
                 }});

  out.push_back({"TRUNC_GF", "enumeration of Lbar_{n,k} (form L) or A_{n,k} (form A)",
                 "q^{C(k+1,2)} [n,k]_q (-q^{n-k+1};q)_k/(q^{2n-k+1};q)_k, or [n,k]_q (-q^{n-k+1};q)_k/(q^{2(n-k+1)};q)_k",
                 false, {{var::q, 30}}, [](std::uint64_t) { return nk_cases(5, {"A", "L"}); },
                 [](const Params& p, const Caps& caps) {
                   const auto n = get_int(p, "n"), k = get_int(p, "k");
                   const bool anti = get_str(p, "form", "L") == "A";
                   const auto N = cap_of(caps, var::q) - 1;
                   const auto mode = anti ? TruncMode::anti : TruncMode::exactly_k_positive;
                   auto lhs = weight_counts(enumerate_truncated(static_cast<int>(n), static_cast<int>(k), mode, N), N);
                   SparsePoly num = q_binomial(static_cast<int>(n), static_cast<int>(k), var::q);
                   if (!anti) num = num.times_monomial(qpow(k * (k + 1) / 2));
                   TruncSeries r(num, caps);
                   r = times_pochhammer(r, qpow(n - k + 1), qpow(1), static_cast<int>(k), -1, false);
                   r = times_pochhammer(r, qpow(anti ? 2 * (n - k + 1) : 2 * n - k + 1), qpow(1), static_cast<int>(k), 1, true);
                   return compare_polys(counts_poly(lhs, var::q), r.poly(), caps,
                                        anti ? "enumeration of A_{n,k}" : "enumeration of Lbar_{n,k}", "q-binomial product");
                 }});

  out.push_back({"CSS", "sum_j q^{j(3j-1)/2}(q^2;q^6)_j/(q;q)_{3j} (form 1) or q^{j(3j+1)/2}(q^4;q^6)_j/(q;q)_{3j+1} (form 2)",
                 "1/((q;q^3)_inf (q^5;q^6)_inf) or 1/((q^2;q^3)_inf (q;q^6)_inf)", false, {{var::q, 41}},
                 [](std::uint64_t) { return range_cases("form", 1, 2); },
                 [](const Params& p, const Caps& caps) {
                   const bool second = get_int(p, "form", 1) == 2;
                   const int Q = cap_of(caps, var::q);
                   TruncSeries sum(SparsePoly(), caps);
                   for (int j = 0;; ++j) {
                     const int lead = second ? j * (3 * j + 1) / 2 : j * (3 * j - 1) / 2;
                     if (lead >= Q) break;
                     TruncSeries term(SparsePoly::variable(var::q, lead), caps);
                     term = times_pochhammer(term, qpow(second ? 4 : 2), qpow(6), j, 1, false);
                     term = times_pochhammer(term, qpow(1), qpow(1), second ? 3 * j + 1 : 3 * j, 1, true);
                     sum = sum + term;
                   }
                   TruncSeries prod = TruncSeries::one(caps);
                   prod = times_pochhammer(prod, qpow(second ? 2 : 1), qpow(3), std::nullopt, 1, true);
                   prod = times_pochhammer(prod, qpow(second ? 1 : 5), qpow(6), std::nullopt, 1, true);
                   return compare_polys(sum.poly(), prod.poly(), caps, "sum side", "product side");
                 }});

  struct CountPair {
    const char* id;
    PartitionClass lhs, rhs;
    const char* ld;
    const char* rd;
  };
  const std::vector<CountPair> pairs = {
      {"NEW14", PartitionClass::distinct_even_evenidx(), PartitionClass::mod_class(8, {1, 5, 6}),
       "distinct parts, lambda_{2i} even", "parts = 1,5,6 mod 8"},
      {"NEW41", PartitionClass::distinct_even_oddidx(), PartitionClass::mod_class(8, {2, 3, 7}),
       "distinct parts, lambda_{2i-1} even", "parts = 2,3,7 mod 8"},
      {"GOLLNITZ14", PartitionClass::gollnitz_gap(false), PartitionClass::mod_class(8, {1, 5, 6}),
       "gaps >= 2, no consecutive odd parts", "parts = 1,5,6 mod 8"},
      {"GOLLNITZ41", PartitionClass::gollnitz_gap(true), PartitionClass::mod_class(8, {2, 3, 7}),
       "gaps >= 2, no consecutive odd parts, no ones", "parts = 2,3,7 mod 8"},
  };
  for (const auto& cp : pairs) {
    out.push_back({cp.id, cp.ld, cp.rd, true, {{var::q, 31}}, [](std::uint64_t) { return std::vector<Params>{Params::object()}; },
                   [cp](const Params&, const Caps& caps) { return count_identity(cp.lhs, cp.rhs, caps, cp.ld, cp.rd); }});
  }

  for (const bool fourteen : {true, false}) {
    out.push_back({fourteen ? "GF_14" : "GF_41",
                   fourteen ? "sequences l1/2 > l2/1 > l3/2 > ..., x^{odd positions} y^{even positions}"
                            : "sequences l1/1 > l2/2 > l3/1 > ..., x^{odd positions} y^{even positions}",
                   fourteen ? "1/((x;x^2y)_inf (x^4y;x^4y^2)_inf)" : "1/((x;x^2y^4)_inf (xy;xy^2)_inf)", true,
                   {{var::t, 21}}, [](std::uint64_t) { return std::vector<Params>{Params::object()}; },
                   [fourteen](const Params&, const Caps& caps) {
                     const int T = cap_of(caps, var::t);
                     SparsePoly lhs = graded_sequences(
                         fourteen ? PartitionClass::alt_ratio_21() : PartitionClass::alt_ratio_12(), T - 1);
                     std::vector<Monomial> f;
                     for (int i = 0; i < T; ++i) {
                       if (fourteen) {
                         f.push_back(graded(1 + 2 * i, i));
                         f.push_back(graded(4 + 4 * i, 1 + 2 * i));
                       } else {
                         f.push_back(graded(1 + 2 * i, 4 * i));
                         f.push_back(graded(1 + i, 1 + 2 * i));
                       }
                     }
                     return compare_polys(lhs, product_inverse(f, caps).poly(), caps, "enumeration, graded by t",
                                          "infinite product, graded by t");
                   }});
  }
}

void add_kl(std::vector<Entry>& out) {
  out.push_back({"KL", "sum over G_n^{(k,l)} of x^{|lambda|_o} y^{|lambda|_e}, graded by t",
                 "prod 1/(1 - x^{a_i} y^{b_{i-1}}), a and b the (k,l)/(l,k) sequences swapped by parity of n", false,
                 {{var::t, 16}},
                 [](std::uint64_t) {
                   std::vector<Params> v;
                   for (auto [k, l] : std::vector<std::pair<int, int>>{{1, 4}, {2, 2}, {2, 3}, {3, 2}, {3, 3}, {4, 1}})
                     for (int n = 1; n <= 4; ++n) v.push_back({{"k", k}, {"l", l}, {"n", n}});
                   return v;
                 },
                 [](const Params& p, const Caps& caps) {
                   const auto k = get_int(p, "k"), l = get_int(p, "l");
                   const auto n = static_cast<std::size_t>(get_int(p, "n"));
                   const int T = cap_of(caps, var::t);
                   SparsePoly lhs;
                   for_each_g_member(make_kl(k, l, n), T - 1, [&](const Parts& lam) {
                     const auto g = g_sums(lam);
                     lhs.add_term(graded(g.odd, g.even), 1);
                   });
                   const auto a = kl_terms_with_zero(k, l, n), b = kl_terms_with_zero(l, k, n);
                   std::vector<Monomial> f;
                   for (std::size_t i = 1; i <= n; ++i)
                     f.push_back(n % 2 == 0 ? graded(a[i], b[i - 1]) : graded(b[i], a[i - 1]));
                   return compare_polys(lhs, product_inverse(f, caps).poly(), caps, "enumeration of G_n",
                                        "product over the (k,l) and (l,k) sequences");
                 }});

  out.push_back({"ELL_LH", "sum over G_n^{(l,l)} of q^|lambda|", "prod_{i=1..n} 1/(1-q^{a_i+a_{i-1}})", false,
                 {{var::q, 30}},
                 [](std::uint64_t) {
                   std::vector<Params> v;
                   for (int l = 2; l <= 5; ++l)
                     for (int n = 1; n <= 5; ++n) v.push_back({{"l", l}, {"n", n}});
                   return v;
                 },
                 [](const Params& p, const Caps& caps) {
                   const auto l = get_int(p, "l");
                   const auto n = static_cast<std::size_t>(get_int(p, "n"));
                   SparsePoly lhs;
                   for_each_g_member(make_kl(l, l, n), cap_of(caps, var::q) - 1, [&](const Parts& lam) {
                     std::int64_t w = 0;
                     for (auto x : lam) w += x;
                     lhs.add_term(qpow(w), 1);
                   });
                   const auto a = kl_terms_with_zero(l, l, n);
                   std::vector<Monomial> f;
                   for (std::size_t i = 1; i <= n; ++i) f.push_back(qpow(a[i] + a[i - 1]));
                   return compare_polys(lhs, product_inverse(f, caps).poly(), caps, "enumeration of the l-sequence partitions",
                                        "product of 1/(1-q^{p_i})");
                 }});

  out.push_back({"ELL_EULER", "partitions with consecutive ratios > c_l", "partitions into parts a_i + a_{i-1}", true,
                 {{var::q, 31}}, [](std::uint64_t) { return range_cases("l", 2, 5); },
                 [](const Params& p, const Caps& caps) {
                   const auto l = get_int(p, "l");
                   const auto N = cap_of(caps, var::q) - 1;
                   std::vector<std::int64_t> parts;
                   const auto a = kl_terms_with_zero(l, l, 40);
                   for (std::size_t i = 1; i < a.size() && a[i] + a[i - 1] <= N; ++i) parts.push_back(a[i] + a[i - 1]);
                   return count_identity(PartitionClass::ratio_gt_c(l), PartitionClass::parts_from(parts), caps,
                                         "ratio > c_l partitions", "partitions into p_i");
                 }});

  out.push_back({"THETA", "Theta insertion on partitions into p_i with weight <= N",
                 "weight-preserving injection onto ratio > c_l partitions with equal per-weight counts", true, {},
                 [](std::uint64_t) {
                   std::vector<Params> v;
                   for (int l = 2; l <= 4; ++l) v.push_back({{"l", l}, {"N", 20}});
                   return v;
                 },
                 [](const Params& p, const Caps&) {
                   const auto l = get_int(p, "l"), N = get_int(p, "N");
                   const ThetaReport rep = theta_bijectivity_check(l, N);
                   std::vector<std::string> lhs{rep.weights_preserved ? "weights preserved" : "weight changed",
                                                rep.images_in_target ? "images in target" : "image outside target",
                                                rep.injective ? "injective" : "not injective",
                                                rep.counts_match ? "counts match" : "counts differ"};
                   std::vector<std::string> rhs{"weights preserved", "images in target", "injective", "counts match"};
                   if (l == 2) {
                     const bool same = enumerate_partition_class(PartitionClass::ratio_gt_c(2), N) ==
                                       enumerate_partition_class(PartitionClass::distinct(), N);
                     lhs.push_back(same ? "target = distinct parts" : "target differs from distinct parts");
                     rhs.push_back("target = distinct parts");
                   }
                   Outcome o = compare_values(lhs, rhs, "Theta", "bijection properties");
                   o.notes = std::to_string(rep.inputs) + " inputs";
                   for (std::size_t n = 2; n <= 4; ++n) {
                     const auto probe = theta_bme_probe(l, n, std::min<std::int64_t>(N, 15));
                     o.notes += "; Theta vs BME_" + std::to_string(n) + " inverse (k=l, unproven): " +
                                std::to_string(probe.agreed) + "/" + std::to_string(probe.compared) + " agree";
                   }
                   return o;
                 }});

  out.push_back({"BME", "sum over G_n^{(k,l)} of q^{weight of BME_n(mu)}, with round trip and injectivity",
                 "prod 1/(1-q^{v_i}) over rho (n even) or r (n odd)", false, {{var::q, 16}},
                 [](std::uint64_t) {
                   std::vector<Params> v;
                   for (auto [k, l] : std::vector<std::pair<int, int>>{{1, 4}, {2, 2}, {4, 1}})
                     for (int n = 1; n <= 4; ++n) v.push_back({{"k", k}, {"l", l}, {"n", n}});
                   return v;
                 },
                 [](const Params& p, const Caps& caps) {
                   const KL kl{get_int(p, "k"), get_int(p, "l")};
                   const auto n = static_cast<std::size_t>(get_int(p, "n"));
                   SparsePoly lhs;
                   std::set<PartMultiplicity> images;
                   std::vector<std::string> problems;
                   for_each_g_member(make_kl(kl.k, kl.l, n), cap_of(caps, var::q) - 1, [&](const Parts& mu) {
                     const auto img = bme(mu, kl);
                     std::int64_t w = 0, wmu = 0;
                     for (const auto& [v, c] : img) w += v * c;
                     for (auto x : mu) wmu += x;
                     if (w != wmu && problems.empty()) problems.push_back("weight changed");
                     if (!images.insert(img).second && problems.empty()) problems.push_back("not injective");
                     if (bme_inv(img, n, kl) != mu && problems.empty()) problems.push_back("round trip differs");
                     lhs.add_term(qpow(w), 1);
                   });
                   std::vector<Monomial> f;
                   for (auto v : bme_part_values(n, kl)) f.push_back(qpow(v));
                   if (!problems.empty()) return compare_values(problems, {"bijective"}, "BME", "expected");
                   return compare_polys(lhs, product_inverse(f, caps).poly(), caps, "images of G_n under BME",
                                        "partitions into the BME parts");
                 }});
}

void add_refined(std::vector<Entry>& out) {
  const Caps refined_caps{{var::q, 25}, {var::u, 12}, {var::v, 5}};
  out.push_back({"REFINED_L", "sum over L_n of q^|l| u^{|ceil l|} v^{o(ceil l)}",
                 "prod (1+uvq^i)/(1-u^2 q^{n+i})", false, refined_caps,
                 [](std::uint64_t) { return range_cases("n", 1, 5); },
                 [](const Params& p, const Caps& caps) {
                   const auto n = get_int(p, "n");
                   auto lhs = multi_gf(one_to_n(n), caps, {{Stat::weight, var::q}, {Stat::ceil_sum, var::u}, {Stat::ceil_odd, var::v}});
                   TruncSeries r = TruncSeries::one(caps);
                   for (std::int64_t i = 1; i <= n; ++i)
                     r = r.mul_one_minus(mono({{var::u, 1}, {var::v, 1}, {var::q, static_cast<int>(i)}}), -1)
                             .div_one_minus(mono({{var::u, 2}, {var::q, static_cast<int>(n + i)}}));
                   return compare_polys(lhs.poly(), r.poly(), caps, "enumeration of L_n", "refined product");
                 }});

  out.push_back({"REFINED_A", "sum over A_n of q^|l| u^{|floor l|} v^{o(floor l)}, floor by the ambient s_i",
                 "prod (1+uvq^i)/(1-u^2 q^{i+1})", false, refined_caps,
                 [](std::uint64_t) { return range_cases("n", 1, 5); },
                 [](const Params& p, const Caps& caps) {
                   const auto n = get_int(p, "n");
                   auto lhs = multi_gf(n_to_one(n), caps, {{Stat::weight, var::q}, {Stat::floor_sum, var::u}, {Stat::floor_odd, var::v}});
                   TruncSeries r = TruncSeries::one(caps);
                   for (std::int64_t i = 1; i <= n; ++i)
                     r = r.mul_one_minus(mono({{var::u, 1}, {var::v, 1}, {var::q, static_cast<int>(i)}}), -1)
                             .div_one_minus(mono({{var::u, 2}, {var::q, static_cast<int>(i + 1)}}));
                   return compare_polys(lhs.poly(), r.poly(), caps, "enumeration of A_n", "refined product");
                 }});

  out.push_back({"REFINED_TRUNC", "enumeration of Lbar_{n,k} (ceil statistics) or A_{n,k} (floor statistics)",
                 "u^k q^{C(k+1,2)} [n,k]_q prod(v+uq^{n-k+1+i})/(u^2q^{2n-k+1};q)_k, or [n,k]_q (-uvq^{n-k+1};q)_k/(u^2q^{2(n-k+1)};q)_k",
                 false, refined_caps, [](std::uint64_t) { return nk_cases(4, {"A", "L"}); },
                 [](const Params& p, const Caps& caps) {
                   const auto n = get_int(p, "n"), k = get_int(p, "k");
                   const bool anti = get_str(p, "form", "L") == "A";
                   const SparsePoly lhs = refined_trunc_enumeration(static_cast<int>(n), static_cast<int>(k), anti, caps);
                   SparsePoly num = q_binomial(static_cast<int>(n), static_cast<int>(k), var::q);
                   if (anti) {
                     TruncSeries r(num, caps);
                     r = times_pochhammer(r, mono({{var::u, 1}, {var::v, 1}, {var::q, static_cast<int>(n - k + 1)}}), qpow(1),
                                          static_cast<int>(k), -1, false);
                     r = times_pochhammer(r, mono({{var::u, 2}, {var::q, static_cast<int>(2 * (n - k + 1))}}), qpow(1),
                                          static_cast<int>(k), 1, true);
                     return compare_polys(lhs, r.poly(), caps, "enumeration of A_{n,k}", "refined product without prefix");
                   }
                   num = num.times_monomial(mono({{var::u, static_cast<int>(k)}, {var::q, static_cast<int>(k * (k + 1) / 2)}}));
                   for (std::int64_t i = 0; i < k; ++i)
                     num *= SparsePoly::variable(var::v) + SparsePoly::monomial(mono({{var::u, 1}, {var::q, static_cast<int>(n - k + 1 + i)}}));
                   TruncSeries r(num, caps);
                   r = times_pochhammer(r, mono({{var::u, 2}, {var::q, static_cast<int>(2 * n - k + 1)}}), qpow(1),
                                        static_cast<int>(k), 1, true);
                   return compare_polys(lhs, r.poly(), caps, "enumeration of Lbar_{n,k}", "refined product");
                 }});

  out.push_back({"LA_RECIP", "sum over L_n of q^|l| u^{|ceil l|}",
                 "A_n(1/q, u q^{n+1}) by enumeration of A_n with floor statistics", false, {{var::q, 25}, {var::u, 12}},
                 [](std::uint64_t) { return range_cases("n", 1, 5); },
                 [](const Params& p, const Caps& caps) {
                   const auto n = get_int(p, "n");
                   const auto lhs = multi_gf(one_to_n(n), caps, {{Stat::weight, var::q}, {Stat::ceil_sum, var::u}});
                   const int U = cap_of(caps, var::u);
                   const SSeq anti = n_to_one(n);
                   SparsePoly rhs;
                   bool negative = false;
                   // floor(lambda_n/1) = lambda_n bounds the u-degree
                   for_each_member(anti, {std::nullopt, U - 1, std::nullopt}, [&](const Parts& lam) {
                     const auto b = stats(lam, anti);
                     const auto qe = (n + 1) * b.floor_sum - b.weight;
                     if (qe < 0) {
                       negative = true;
                       return;
                     }
                     Monomial m = mono({{var::q, static_cast<int>(qe)}, {var::u, static_cast<int>(b.floor_sum)}});
                     if (below_caps(m, caps)) rhs.add_term(m, 1);
                   });
                   Outcome o = compare_polys(lhs.poly(), rhs, caps, "enumeration of L_n", "substituted A_n enumeration");
                   if (negative) {
                     o.status = Status::FAIL;
                     if (!o.mismatch) o.mismatch = Mismatch{{{"q", "negative"}}, "0", "nonzero"};
                     o.notes = "negative q-exponents appeared on the substituted side";
                   }
                   return o;
                 }});
}

}  // namespace

void add_partition_theorems(std::vector<Entry>& out) {
  add_q_series(out);
  add_kl(out);
  add_refined(out);
}

}  // namespace lhp::harness::detail
