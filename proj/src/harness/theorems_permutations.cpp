#include "lhp/bijections.hpp"
#include "lhp/enumeration.hpp"
#include "lhp/eulerian.hpp"
#include "lhp/geometry.hpp"
#include "lhp/statistics.hpp"
#include "theorems.hpp"

namespace lhp::harness::detail {

namespace {

Monomial mono(std::initializer_list<std::pair<int, int>> e) { return Monomial(e); }
Monomial xpow(std::int64_t e) { return Monomial::of(var::x, static_cast<int>(e)); }

SparsePoly over_perms(int n, const std::function<Weights(const Perm&)>& weigh) {
  return distribution<Perm>([n](const std::function<void(const Perm&)>& v) { for_each_perm(n, v); }, weigh);
}

SparsePoly over_signed(int n, const std::function<Weights(const SignedPerm&)>& weigh) {
  return distribution<SignedPerm>([n](const std::function<void(const SignedPerm&)>& v) { for_each_signed_perm(n, v); },
                                  weigh);
}

SparsePoly over_invseqs(const SSeq& s, const std::function<Weights(const InvSeq&)>& weigh) {
  return distribution<InvSeq>([&s](const std::function<void(const InvSeq&)>& v) { for_each_invseq(s, v); }, weigh);
}

/// Caps one above every exponent of p, so truncation keeps all of p.
Caps covering_caps(const SparsePoly& p) {
  Caps c{{var::q, 1}, {var::u, 1}};
  for (int v : p.variables()) c[v] = p.degree_in(v) + 1;
  return c;
}

SparsePoly product(const std::vector<SparsePoly>& fs) {
  SparsePoly r(1);
  for (const auto& f : fs) r *= f;
  return r;
}

SSeq multiples(std::int64_t n, std::int64_t k) {
  std::vector<std::int64_t> v;
  for (std::int64_t i = 1; i <= n; ++i) v.push_back(i * k);
  return make_explicit(v);
}

std::int64_t tail_sum(const SSeq& s, std::size_t from) {
  std::int64_t t = 0;
  for (std::size_t j = from; j < s.size(); ++j) t += s[j];
  return t;
}

std::vector<Params> n_cases(std::int64_t lo, std::int64_t hi) {
  std::vector<Params> v;
  for (auto n = lo; n <= hi; ++n) v.push_back({{"n", n}});
  return v;
}

std::vector<Params> seq_cases(const std::vector<SSeq>& ss) {
  std::vector<Params> v;
  for (const auto& s : ss) v.push_back({{"s", seq_param(s)}});
  return v;
}

Outcome skipped(const std::string& why) {
  Outcome o;
  o.status = Status::SKIPPED;
  o.notes = why;
  return o;
}

void add_box_and_mahonian(std::vector<Entry>& out) {
  auto box_cases = [](std::uint64_t) {
    std::vector<Params> v;
    for (int n = 1; n <= 5; ++n)
      for (int t = 0; t <= 3; ++t)
        for (int i = 0; i < n; ++i) v.push_back({{"n", n}, {"t", t}, {"i", i}});
    return v;
  };
  out.push_back({"BOX", "#{lambda in L_n : lambda_n <= tn+i} by enumeration", "(t+1)^{n-i} (t+2)^i", false, {}, box_cases,
                 [](const Params& p, const Caps&) {
                   const auto n = get_int(p, "n"), t = get_int(p, "t"), i = get_int(p, "i");
                   const auto count = enumerate_last(one_to_n(n), t * n + i).size();
                   Int expect = 1;
                   for (std::int64_t j = 0; j < n - i; ++j) expect *= t + 1;
                   for (std::int64_t j = 0; j < i; ++j) expect *= t + 2;
                   return compare_values({std::to_string(count)}, {expect.get_str()}, "count", "product");
                 }});

  out.push_back({"QBOX", "sum over lambda in L_n, lambda_n <= tn+i, of u^{|ceil lambda|}", "[t+1]_u^{n-i} [t+2]_u^i",
                 false, {}, box_cases, [](const Params& p, const Caps&) {
                   const auto n = get_int(p, "n"), t = get_int(p, "t"), i = get_int(p, "i");
                   const SSeq s = one_to_n(n);
                   SparsePoly lhs;
                   for (const auto& lam : enumerate_last(s, t * n + i)) lhs.add_term(Monomial::of(var::u, static_cast<int>(stats(lam, s).ceil_sum)), 1);
                   const SparsePoly rhs = geometric_sum(static_cast<int>(t + 1), Monomial::of(var::u, 1)).pow(static_cast<int>(n - i)) *
                                          geometric_sum(static_cast<int>(t + 2), Monomial::of(var::u, 1)).pow(static_cast<int>(i));
                   return compare_polys(lhs, rhs, {}, "enumeration", "u-analog product");
                 }});

  out.push_back({"REVERSE", "#{lambda in L^(s) : lambda_n/s_n <= t}", "#{lambda in L^(rev s) : lambda_n/s_1 <= t}", false, {},
                 [](std::uint64_t seed) {
                   std::vector<Params> v;
                   for (const auto& s : random_sequences(seed ^ 0x5245, 12, 1, 4, 5))
                     for (int t = 0; t <= 2; ++t) v.push_back({{"s", seq_param(s)}, {"t", t}});
                   return v;
                 },
                 [](const Params& p, const Caps&) {
                   const SSeq s = get_seq(p);
                   const auto t = get_int(p, "t");
                   const auto a = enumerate_last(s, t * s.values.back()).size();
                   const auto b = enumerate_last(s.reversed(), t * s.values.front()).size();
                   return compare_values({std::to_string(a)}, {std::to_string(b)}, "count for s", "count for reversed s");
                 }});

  out.push_back({"MACMAHON", "sum_t [t+1]_u^n x^t", "sum_{S_n} x^des u^maj / prod_{i=0..n} (1 - x u^i)", false,
                 {{var::x, 10}, {var::u, 15}}, [](std::uint64_t) { return n_cases(1, 5); },
                 [](const Params& p, const Caps& caps) {
                   const auto n = static_cast<int>(get_int(p, "n"));
                   SparsePoly lhs;
                   for (int t = 0; t < cap_of(caps, var::x); ++t)
                     lhs += geometric_sum(t + 1, Monomial::of(var::u, 1)).pow(n).times_monomial(xpow(t));
                   const SparsePoly num = over_perms(n, [](const Perm& pi) {
                     const auto st = perm_stats(pi);
                     return Weights{{var::x, st.des}, {var::u, st.maj}};
                   });
                   std::vector<Monomial> f;
                   for (int i = 0; i <= n; ++i) f.push_back(mono({{var::x, 1}, {var::u, i}}));
                   return compare_polys(lhs, divide_by_factors(num, f, caps).poly(), caps, "box sum", "permutation quotient");
                 }});

  out.push_back({"PERMSTATS", "sum over L_n of x^{ceil(lambda_n/n)} u^{|ceil lambda|}",
                 "sum_{S_n} x^des u^maj / prod_{i=1..n} (1 - x u^i)", false, {{var::x, 8}, {var::u, 15}},
                 [](std::uint64_t) { return n_cases(1, 5); },
                 [](const Params& p, const Caps& caps) {
                   const auto n = static_cast<int>(get_int(p, "n"));
                   const auto lhs = multi_gf(one_to_n(n), caps, {{Stat::last_ceil, var::x}, {Stat::ceil_sum, var::u}});
                   const SparsePoly num = over_perms(n, [](const Perm& pi) {
                     const auto st = perm_stats(pi);
                     return Weights{{var::x, st.des}, {var::u, st.maj}};
                   });
                   std::vector<Monomial> f;
                   for (int i = 1; i <= n; ++i) f.push_back(mono({{var::x, 1}, {var::u, i}}));
                   return compare_polys(lhs.poly(), divide_by_factors(num, f, caps).poly(), caps, "enumeration of L_n",
                                        "permutation quotient");
                 }});

  out.push_back({"BSANTI", "sum over A_n of q^|lambda| u^{|floor lambda|}",
                 "sum_{S_n} q^binv u^maj / prod_{i=1..n} (1 - u^i q^{i(i+1)/2})", false, {{var::q, 25}, {var::u, 12}},
                 [](std::uint64_t) { return n_cases(1, 5); },
                 [](const Params& p, const Caps& caps) {
                   const auto n = static_cast<int>(get_int(p, "n"));
                   const auto lhs = multi_gf(n_to_one(n), caps, {{Stat::weight, var::q}, {Stat::floor_sum, var::u}});
                   const SparsePoly num = over_perms(n, [](const Perm& pi) {
                     const auto st = perm_stats(pi);
                     return Weights{{var::q, st.binv}, {var::u, st.maj}};
                   });
                   std::vector<Monomial> f;
                   for (int i = 1; i <= n; ++i) f.push_back(mono({{var::u, i}, {var::q, i * (i + 1) / 2}}));
                   return compare_polys(lhs.poly(), divide_by_factors(num, f, caps).poly(), caps, "enumeration of A_n",
                                        "permutation quotient");
                 }});
}

void add_quadratic(std::vector<Entry>& out) {
  auto cases = [](std::uint64_t) { return n_cases(1, 6); };
  out.push_back({"MAJBINV", "sum_{S_n} u^maj q^binv", "prod (1 - u^i q^{i(i+1)/2}) (1 + u q^i) / (1 - u^2 q^{i+1})", false, {},
                 cases, [](const Params& p, const Caps&) {
                   const auto n = static_cast<int>(get_int(p, "n"));
                   const SparsePoly lhs = over_perms(n, [](const Perm& pi) {
                     const auto st = perm_stats(pi);
                     return Weights{{var::u, st.maj}, {var::q, st.binv}};
                   });
                   const Caps caps = covering_caps(lhs);
                   TruncSeries r = TruncSeries::one(caps);
                   for (int i = 1; i <= n; ++i)
                     r = r.mul_one_minus(mono({{var::u, i}, {var::q, i * (i + 1) / 2}}))
                             .mul_one_minus(mono({{var::u, 1}, {var::q, i}}), -1)
                             .div_one_minus(mono({{var::u, 2}, {var::q, i + 1}}));
                   Outcome o = compare_polys(lhs, r.poly(), caps, "permutation enumeration", "product");
                   o.notes = "compared below caps " + caps_to_string(caps) + ", which cover the whole left side";
                   return o;
                 }});

  out.push_back({"LHPDIST", "sum_{S_n} q^{(n+1)maj - binv}", "prod_{i=1..n} [i]_{q^{2(n-i)+1}}", false, {}, cases,
                 [](const Params& p, const Caps&) {
                   const auto n = static_cast<int>(get_int(p, "n"));
                   const SparsePoly lhs = over_perms(n, [n](const Perm& pi) {
                     const auto st = perm_stats(pi);
                     return Weights{{var::q, (n + 1) * st.maj - st.binv}};
                   });
                   std::vector<SparsePoly> fs;
                   for (int i = 1; i <= n; ++i) fs.push_back(geometric_sum(i, Monomial::of(var::q, 2 * (n - i) + 1)));
                   return compare_polys(lhs, product(fs), {}, "permutation enumeration", "product");
                 }});

  out.push_back({"MAJSQIN", "sum_{S_n} u^maj q^sqin", "prod_{i=1..n} [i]_{u q^i}", false, {}, cases,
                 [](const Params& p, const Caps&) {
                   const auto n = static_cast<int>(get_int(p, "n"));
                   const SparsePoly lhs = over_perms(n, [](const Perm& pi) {
                     const auto st = perm_stats(pi);
                     return Weights{{var::u, st.maj}, {var::q, st.sqin}};
                   });
                   std::vector<SparsePoly> fs;
                   for (int i = 1; i <= n; ++i) fs.push_back(geometric_sum(i, mono({{var::u, 1}, {var::q, i}})));
                   return compare_polys(lhs, product(fs), {}, "permutation enumeration", "product");
                 }});

  out.push_back({"JOHNSON", "sum_{S_n} u^maj q^siz with siz = (n+1)maj - sqin", "prod_{i=1..n} [i]_{u q^{n+1-i}}", false, {},
                 cases, [](const Params& p, const Caps&) {
                   const auto n = static_cast<int>(get_int(p, "n"));
                   const SparsePoly lhs = over_perms(n, [](const Perm& pi) {
                     const auto st = perm_stats(pi);
                     return Weights{{var::u, st.maj}, {var::q, st.siz}};
                   });
                   std::vector<SparsePoly> fs;
                   for (int i = 1; i <= n; ++i) fs.push_back(geometric_sum(i, mono({{var::u, 1}, {var::q, n + 1 - i}})));
                   return compare_polys(lhs, product(fs), {}, "permutation enumeration", "product");
                 }});

  out.push_back({"QCOR", "sum_{S_n} q^lhp", "prod_{k=1..n} [k]_{q^{2(n-k)+1}}", false, {}, cases,
                 [](const Params& p, const Caps&) {
                   const auto n = static_cast<int>(get_int(p, "n"));
                   const SparsePoly lhs = over_perms(n, [](const Perm& pi) { return Weights{{var::q, perm_stats(pi).lhp}}; });
                   std::vector<SparsePoly> fs;
                   for (int k = 1; k <= n; ++k) fs.push_back(geometric_sum(k, Monomial::of(var::q, 2 * (n - k) + 1)));
                   return compare_polys(lhs, product(fs), {}, "permutation enumeration", "product");
                 }});

  out.push_back({"UQCOR", "sum_{S_n} q^lhp u^comaj",
                 "prod_{k=1..n} (1 + u q^k)(1 - u^{n+1-k} q^{k+...+n}) / (1 - u^2 q^{n+k})", false, {}, cases,
                 [](const Params& p, const Caps&) {
                   const auto n = static_cast<int>(get_int(p, "n"));
                   const SparsePoly lhs = over_perms(n, [](const Perm& pi) {
                     const auto st = perm_stats(pi);
                     return Weights{{var::q, st.lhp}, {var::u, st.comaj}};
                   });
                   const Caps caps = covering_caps(lhs);
                   TruncSeries r = TruncSeries::one(caps);
                   for (int k = 1; k <= n; ++k) {
                     const int tail = n * (n + 1) / 2 - (k - 1) * k / 2;
                     r = r.mul_one_minus(mono({{var::u, 1}, {var::q, k}}), -1)
                             .mul_one_minus(mono({{var::u, n + 1 - k}, {var::q, tail}}))
                             .div_one_minus(mono({{var::u, 2}, {var::q, n + k}}));
                   }
                   Outcome o = compare_polys(lhs, r.poly(), caps, "permutation enumeration", "product");
                   o.notes = "compared below caps " + caps_to_string(caps) + ", which cover the whole left side";
                   return o;
                 }});
}

void add_inversion_sequences(std::vector<Entry>& out) {
  out.push_back({"INVSEQ", "sum over L^(s) of x^{ceil(lambda_n/s_n)}", "E_n^(s)(x) / (1-x)^n", false, {{var::x, 8}},
                 [](std::uint64_t seed) { return seq_cases(random_sequences(seed ^ 0x4953, 30, 1, 4, 5)); },
                 [](const Params& p, const Caps& caps) {
                   const SSeq s = get_seq(p);
                   const auto lhs = multi_gf(s, caps, {{Stat::last_ceil, var::x}});
                   std::vector<Monomial> f(s.size(), xpow(1));
                   return compare_polys(lhs.poly(), divide_by_factors(s_eulerian(s), f, caps).poly(), caps,
                                        "enumeration of L^(s)", "ascent polynomial over (1-x)^n");
                 }});

  auto full = [](const SSeq& s, const Caps& caps, bool height) {
    const std::int64_t sn = s.values.back();
    const auto n = s.size();
    const SparsePoly num = over_invseqs(s, [&](const InvSeq& e) {
      const auto st = invseq_stats(e, s);
      const std::int64_t xe = height ? sn * st.asc - e.back() : st.asc;
      return Weights{{var::x, xe}, {var::u, st.amaj}, {var::q, st.lhp}, {var::z, st.weight}};
    });
    std::vector<Monomial> f;
    for (std::size_t i = 0; i < n; ++i)
      f.push_back(mono({{var::x, static_cast<int>(height ? sn : 1)}, {var::u, static_cast<int>(n - i)}, {var::q, static_cast<int>(tail_sum(s, i))}}));
    const auto lhs = multi_gf(s, caps, {{Stat::weight, var::q}, {height ? Stat::last_part : Stat::last_ceil, var::x},
                                        {Stat::ceil_sum, var::u}, {Stat::eps_sum, var::z}});
    return compare_polys(lhs.poly(), divide_by_factors(num, f, caps).poly(), caps, "enumeration of L^(s)",
                         "inversion-sequence quotient");
  };
  const Caps four{{var::q, 20}, {var::u, 10}, {var::x, 8}, {var::z, 10}};
  out.push_back({"FULLSS", "sum over L^(s) of q^|l| x^{ceil(l_n/s_n)} u^{|ceil l|} z^{|eps+|}",
                 "sum_e x^asc u^amaj q^lhp z^|e| / prod_{i=0..n-1} (1 - x u^{n-i} q^{s_{i+1}+...+s_n})", false, four,
                 [](std::uint64_t seed) { return seq_cases(random_sequences(seed ^ 0x4653, 30, 1, 4, 5)); },
                 [full](const Params& p, const Caps& caps) { return full(get_seq(p), caps, false); }});

  out.push_back({"HT_FULL", "sum over L^(s) of q^|l| x^{l_n} u^{|ceil l|} z^{|eps+|}",
                 "sum_e x^{s_n asc - e_n} u^amaj q^lhp z^|e| / prod (1 - x^{s_n} u^{n-i} q^{s_{i+1}+...+s_n})", false,
                 {{var::q, 20}, {var::u, 10}, {var::x, 12}, {var::z, 10}},
                 [](std::uint64_t seed) { return seq_cases(random_sequences(seed ^ 0x4846, 12, 1, 4, 4)); },
                 [full](const Params& p, const Caps& caps) { return full(get_seq(p), caps, true); }});

  out.push_back({"PERMSGF", "sum over L_n of q^|l| x^{ceil(l_n/n)} u^{|ceil l|} z^{|eps+|}",
                 "sum_{S_n} x^des u^comaj q^lhp z^inv / prod_{i=0..n-1} (1 - x u^{n-i} q^{(i+1)+...+n})", false, four,
                 [](std::uint64_t) { return n_cases(1, 4); },
                 [](const Params& p, const Caps& caps) {
                   const auto n = static_cast<int>(get_int(p, "n"));
                   const SSeq s = one_to_n(n);
                   const SparsePoly num = over_perms(n, [](const Perm& pi) {
                     const auto st = perm_stats(pi);
                     return Weights{{var::x, st.des}, {var::u, st.comaj}, {var::q, st.lhp}, {var::z, st.inv}};
                   });
                   std::vector<Monomial> f;
                   for (int i = 0; i < n; ++i)
                     f.push_back(mono({{var::x, 1}, {var::u, n - i}, {var::q, static_cast<int>(tail_sum(s, static_cast<std::size_t>(i)))}}));
                   const auto lhs = multi_gf(s, caps, {{Stat::weight, var::q}, {Stat::last_ceil, var::x}, {Stat::ceil_sum, var::u}, {Stat::eps_sum, var::z}});
                   return compare_polys(lhs.poly(), divide_by_factors(num, f, caps).poly(), caps, "enumeration of L_n",
                                        "permutation quotient");
                 }});
}

void add_eulerian_families(std::vector<Entry>& out) {
  out.push_back({"REV_E", "E_n^(s)(x)", "E_n^(reverse s)(x)", false, {},
                 [](std::uint64_t seed) { return seq_cases(random_sequences(seed ^ 0x5245, 20, 1, 6, 6)); },
                 [](const Params& p, const Caps&) {
                   const SSeq s = get_seq(p);
                   return compare_polys(s_eulerian(s), s_eulerian(s.reversed()), {}, "ascents over I^(s)", "ascents over I^(rev s)");
                 }});

  out.push_back({"BN", "sum_{B_n} x^des, sigma_0 = 0", "E_n^{(2,4,...,2n)}(x)", false, {},
                 [](std::uint64_t) { return n_cases(1, 5); },
                 [](const Params& p, const Caps&) {
                   const auto n = static_cast<int>(get_int(p, "n"));
                   const SparsePoly lhs = over_signed(n, [](const SignedPerm& s) { return Weights{{var::x, des_signed(s, SignedFlavor::B)}}; });
                   return compare_polys(lhs, s_eulerian(multiples(n, 2)), {}, "signed permutations", "ascent polynomial");
                 }});

  out.push_back({"WREATH", "sum over S_n wr Z_k of x^des (k = 1: S_n, k = 2: B_n)", "E_n^{(k,2k,...,nk)}(x)", false, {},
                 [](std::uint64_t) {
                   std::vector<Params> v;
                   for (int k = 1; k <= 2; ++k)
                     for (int n = 1; n <= 5; ++n) v.push_back({{"k", k}, {"n", n}});
                   return v;
                 },
                 [](const Params& p, const Caps&) {
                   const auto n = static_cast<int>(get_int(p, "n"));
                   const auto k = get_int(p, "k");
                   if (k != 1 && k != 2) throw std::invalid_argument("WREATH is defined here for k = 1, 2 only");
                   const SparsePoly lhs =
                       k == 1 ? over_perms(n, [](const Perm& pi) { return Weights{{var::x, perm_stats(pi).des}}; })
                              : over_signed(n, [](const SignedPerm& s) { return Weights{{var::x, des_signed(s, SignedFlavor::B)}}; });
                   return compare_polys(lhs, s_eulerian(multiples(n, k)), {}, "descents", "ascent polynomial");
                 }});

  out.push_back({"WREATH_LHP", "sum over L_n of x^{ceil(lambda_n/(nk))}", "E_n^{(k,2k,...,nk)}(x) / (1-x)^n", false,
                 {{var::x, 6}},
                 [](std::uint64_t) {
                   std::vector<Params> v;
                   for (int k = 1; k <= 3; ++k)
                     for (int n = 1; n <= 4; ++n) v.push_back({{"k", k}, {"n", n}});
                   return v;
                 },
                 [](const Params& p, const Caps& caps) {
                   const auto n = get_int(p, "n"), k = get_int(p, "k");
                   const int X = cap_of(caps, var::x);
                   SparsePoly lhs;
                   for_each_member(one_to_n(n), {std::nullopt, (X - 1) * n * k, std::nullopt}, [&](const Parts& lam) {
                     lhs.add_term(xpow((lam.back() + n * k - 1) / (n * k)), 1);
                   });
                   std::vector<Monomial> f(static_cast<std::size_t>(n), xpow(1));
                   return compare_polys(lhs, divide_by_factors(s_eulerian(multiples(n, k)), f, caps).poly(), caps,
                                        "enumeration of L_n", "ascent polynomial over (1-x)^n");
                 }});

  out.push_back({"WREATH_K3", "descents on S_n wr Z_k for k >= 3", "E_n^{(k,...,nk)}(x)", false, {},
                 [](std::uint64_t) { return std::vector<Params>{{{"k", 3}}}; },
                 [](const Params&, const Caps&) {
                   return skipped("the natural notion of descent on S_n wr Z_k is not defined for k >= 3; "
                                  "WREATH_LHP checks the inversion-sequence side");
                 }});

  out.push_back({"SIGNED_MULTISET", "descents on signed permutations of {1,1,...,n,n}", "E_{2n}^{(1,4,3,8,...,2n-1,4n)}(x)",
                 false, {}, [](std::uint64_t) { return std::vector<Params>{Params::object()}; },
                 [](const Params&, const Caps&) {
                   return skipped("the descent convention for signed multiset permutations is not given");
                 }});

  out.push_back({"ONE_K", "sum_{S_n} x^exc k^{n-cyc}", "E_{n,k}(x) over the 1 mod k inversion sequences", false, {},
                 [](std::uint64_t) {
                   std::vector<Params> v;
                   for (int k = 1; k <= 3; ++k)
                     for (int n = 1; n <= 5; ++n) v.push_back({{"k", k}, {"n", n}});
                   return v;
                 },
                 [](const Params& p, const Caps&) {
                   const auto n = static_cast<int>(get_int(p, "n"));
                   const auto k = get_int(p, "k");
                   SparsePoly lhs;
                   for_each_perm(n, [&](const Perm& pi) {
                     const auto st = perm_stats(pi);
                     Int w = 1;
                     for (std::int64_t j = 0; j < n - st.cyc; ++j) w *= k;
                     lhs.add_term(xpow(st.exc), w);
                   });
                   return compare_polys(lhs, one_k_eulerian(n, k), {}, "excedances and cycles", "1/k-Eulerian polynomial");
                 }});

  out.push_back({"MULTI1", "descent polynomial of permutations of {1,1,...,n,n}", "E_{2n}^{(1,1,3,2,...,2n-1,n)}(x)", false, {},
                 [](std::uint64_t) { return n_cases(1, 4); },
                 [](const Params& p, const Caps&) {
                   const auto n = get_int(p, "n");
                   MultisetWord letters;
                   std::vector<std::int64_t> s;
                   for (std::int64_t i = 1; i <= n; ++i) {
                     letters.push_back(static_cast<int>(i));
                     letters.push_back(static_cast<int>(i));
                     s.push_back(2 * i - 1);
                     s.push_back(i);
                   }
                   const SparsePoly lhs = distribution<MultisetWord>(
                       [&](const std::function<void(const MultisetWord&)>& v) { for_each_multiset_perm(letters, v); },
                       [](const MultisetWord& w) { return Weights{{var::x, des_multiset(w)}}; });
                   return compare_polys(lhs, s_eulerian(make_explicit(s)), {}, "multiset permutations", "ascent polynomial");
                 }});

  out.push_back({"TYPED_FACTOR", "sum_{B_n} x^{des_D}, sigma_0 = -sigma_2", "2 * sum_{D_n} x^{des_D}", false, {},
                 [](std::uint64_t) { return n_cases(2, 5); },
                 [](const Params& p, const Caps&) {
                   const auto n = static_cast<int>(get_int(p, "n"));
                   SparsePoly all, even;
                   for_each_signed_perm(n, [&](const SignedPerm& s) {
                     const Monomial m = xpow(des_signed(s, SignedFlavor::D));
                     all.add_term(m, 1);
                     int neg = 0;
                     for (int v : s) neg += v < 0;
                     if (neg % 2 == 0) even.add_term(m, 2);
                   });
                   return compare_polys(all, even, {}, "all signed permutations", "twice the even-sign subgroup");
                 }});

  out.push_back({"REALROOT", "Sturm count of distinct real roots of E_n^(s) (or of the D_n descent polynomial)",
                 "degree of the square-free part", false, {},
                 [](std::uint64_t seed) {
                   std::vector<Params> v;
                   for (const char* row : {"1,2,3,4,5,6", "6,5,4,3,2,1", "2,4,6,8,10", "1,3,5,7,9,11", "1,4,3,8,5,12",
                                           "1,1,3,2,5,3", "7,2,3,5,4,6"})
                     v.push_back({{"s", row}});
                   for (const auto& s : random_sequences(seed ^ 0x5252, 200, 1, 6, 8)) v.push_back({{"s", seq_param(s)}});
                   for (int n = 2; n <= 5; ++n) v.push_back({{"typeD", n}});
                   return v;
                 },
                 [](const Params& p, const Caps&) {
                   SparsePoly poly;
                   if (p.contains("typeD")) {
                     const auto n = static_cast<int>(get_int(p, "typeD"));
                     SparsePoly evens;
                     for_each_signed_perm(n, [&](const SignedPerm& s) {
                       int neg = 0;
                       for (int v : s) neg += v < 0;
                       if (neg % 2 == 0) evens.add_term(xpow(des_signed(s, SignedFlavor::D)), 1);
                     });
                     poly = evens;
                   } else {
                     poly = s_eulerian(get_seq(p));
                   }
                   const auto rc = real_root_count(poly, var::x);
                   Outcome o = compare_values({std::to_string(rc.distinct_real_roots)}, {std::to_string(rc.degree_squarefree)},
                                              "distinct real roots", "square-free degree");
                   o.notes = "polynomial " + poly.to_string();
                   return o;
                 }});
}

void add_heights(std::vector<Entry>& out) {
  out.push_back({"HT_GF", "sum over L^(s) of x^{lambda_n}", "Q_n^(s)(x) / (1 - x^{s_n})^n", false, {{var::x, 15}},
                 [](std::uint64_t seed) { return seq_cases(random_sequences(seed ^ 0x4854, 20, 1, 4, 5)); },
                 [](const Params& p, const Caps& caps) {
                   const SSeq s = get_seq(p);
                   const auto lhs = multi_gf(s, caps, {{Stat::last_part, var::x}});
                   std::vector<Monomial> f(s.size(), xpow(s.values.back()));
                   return compare_polys(lhs.poly(), divide_by_factors(inflated_eulerian(s), f, caps).poly(), caps,
                                        "enumeration of L^(s)", "inflated Eulerian quotient");
                 }});

  out.push_back({"LHP_HT", "form perm: sum_{S_n} x^{n des - n + pi_n}; form count: sum_t |tR_n cap Z^n| x^t",
                 "Q_n^{(1..n)}(x); sum_{j,i} (j+1)^{n-i} (j+2)^i x^{jn+i}", false, {{var::x, 20}},
                 [](std::uint64_t) {
                   std::vector<Params> v;
                   for (int n = 1; n <= 6; ++n) {
                     v.push_back({{"n", n}, {"form", "count"}});
                     v.push_back({{"n", n}, {"form", "perm"}});
                   }
                   return v;
                 },
                 [](const Params& p, const Caps& caps) {
                   const auto n = static_cast<int>(get_int(p, "n"));
                   if (get_str(p, "form", "perm") == "perm") {
                     const SparsePoly lhs = over_perms(n, [n](const Perm& pi) {
                       return Weights{{var::x, n * perm_stats(pi).des - n + pi.back()}};
                     });
                     return compare_polys(lhs, inflated_eulerian(one_to_n(n)), {}, "permutations", "inflated Eulerian polynomial");
                   }
                   const int X = cap_of(caps, var::x);
                   const QuasiPoly qp = ehrhart_quasi_R(one_to_n(n));
                   SparsePoly lhs, rhs;
                   for (int t = 0; t < X; ++t) {
                     lhs.add_term(xpow(t), qp(t).get_num());
                     const int j = t / n, i = t % n;
                     Int c = 1;
                     for (int a = 0; a < n - i; ++a) c *= j + 1;
                     for (int a = 0; a < i; ++a) c *= j + 2;
                     rhs.add_term(xpow(t), c);
                   }
                   return compare_polys(lhs, rhs, caps, "fitted quasi-polynomial", "box product");
                 }});

  out.push_back({"CHUNG_GRAHAM", "sum_{S_n} x^{n des + pi_n} divided by 1 + x + ... + x^{n-1}",
                 "x * sum_{S_{n-1}} x^{n des + pi_{n-1}}", false, {}, [](std::uint64_t) { return n_cases(2, 6); },
                 [](const Params& p, const Caps&) {
                   const auto n = static_cast<int>(get_int(p, "n"));
                   const SparsePoly top = over_perms(n, [n](const Perm& pi) { return Weights{{var::x, n * perm_stats(pi).des + pi.back()}}; });
                   const SparsePoly lhs = divide_exact(top, geometric_sum(n, xpow(1)));
                   const SparsePoly rhs = over_perms(n - 1, [n](const Perm& pi) {
                                           return Weights{{var::x, n * perm_stats(pi).des + pi.back()}};
                                         }).times_monomial(xpow(1));
                   return compare_polys(lhs, rhs, {}, "exact quotient", "shifted S_{n-1} sum");
                 }});

  out.push_back({"QDIVIDED", "Q_n^(s)(x) / (1 + x + ... + x^{s_n - 1}) by exact division",
                 "sum over I_{n-1}^(s) of x^{s_n asc e - floor(s_n e_{n-1}/s_{n-1})}", false, {},
                 [](std::uint64_t seed) { return seq_cases(random_sequences(seed ^ 0x5144, 20, 1, 5, 6)); },
                 [](const Params& p, const Caps&) {
                   const SSeq s = get_seq(p);
                   const SparsePoly lhs = divide_exact(inflated_eulerian(s), geometric_sum(static_cast<int>(s.values.back()), xpow(1)));
                   return compare_polys(lhs, inflated_divided(s), {}, "exact division", "enumeration of I_{n-1}");
                 }});

  out.push_back({"AS_COINCIDE", "nonzero coefficients of Q_n^(s)/(1+...+x^{s_n-1}), in order",
                 "nonzero coefficients of Q_{n-1}^(s_1..s_{n-1}), in order", false, {},
                 [](std::uint64_t seed) {
                   std::vector<Params> v;
                   for (auto s : random_sequences(seed ^ 0x4153, 20, 2, 5, 6)) {
                     auto vals = s.values;
                     std::sort(vals.begin(), vals.end());
                     v.push_back({{"s", seq_param(make_explicit(vals))}});
                   }
                   return v;
                 },
                 [](const Params& p, const Caps&) {
                   const SSeq s = get_seq(p);
                   for (std::size_t i = 1; i < s.size(); ++i)
                     if (s[i] < s[i - 1]) throw std::invalid_argument("AS_COINCIDE needs a nondecreasing sequence");
                   auto nonzero = [](const SparsePoly& poly) {
                     std::vector<std::string> out;
                     for (const auto& c : poly.dense(var::x))
                       if (c != 0) out.push_back(c.get_str());
                     return out;
                   };
                   return compare_values(nonzero(inflated_divided(s)), nonzero(inflated_eulerian(s.prefix(s.size() - 1))),
                                         "quotient coefficients", "prefix Q coefficients");
                 }});
}

}  // namespace

void add_permutation_theorems(std::vector<Entry>& out) {
  add_box_and_mahonian(out);
  add_quadratic(out);
  add_inversion_sequences(out);
  add_eulerian_families(out);
  add_heights(out);
}

}  // namespace lhp::harness::detail
