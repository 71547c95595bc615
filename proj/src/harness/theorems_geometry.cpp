#include <numeric>

#include "lhp/enumeration.hpp"
#include "lhp/eulerian.hpp"
#include "lhp/geometry.hpp"
#include "theorems.hpp"

namespace lhp::harness::detail {

namespace {

Monomial xpow(std::int64_t e) { return Monomial::of(var::x, static_cast<int>(e)); }

std::string yes_no(bool b) { return b ? "yes" : "no"; }

Int product_of(const SSeq& s) {
  Int p = 1;
  for (auto v : s.values) p *= v;
  return p;
}

std::vector<Params> sample(std::uint64_t seed, int count, int max_n, int max_s) {
  std::vector<Params> v;
  for (const auto& s : random_sequences(seed, count, 1, max_n, max_s)) v.push_back({{"s", seq_param(s)}});
  return v;
}

Outcome parallelepiped_identity(const SSeq& s, const std::string& form) {
  if (form == "E") {
    SparsePoly lhs;
    const auto sn = s.values.back();
    for (const auto& p : pi_points(s).points) lhs.add_term(xpow((p.back() + sn - 1) / sn), 1);
    return compare_polys(lhs, s_eulerian(s), {}, "Pi points by ceil(lambda_n/s_n)", "ascents over I^(s)");
  }
  if (form == "Q") {
    SparsePoly lhs;
    for (const auto& p : pi_points(s).points) lhs.add_term(xpow(p.back()), 1);
    return compare_polys(lhs, inflated_eulerian(s), {}, "Pi points by lambda_n", "inflated ascents over I^(s)");
  }
  if (form == "Qdiv") {
    SparsePoly lhs;
    for (const auto& p : pi_prime_points(s).points) lhs.add_term(xpow(p.back()), 1);
    return compare_polys(lhs, inflated_divided(s), {}, "Pi' points by lambda_n", "sum over I_{n-1}^(s)");
  }
  throw std::invalid_argument("form must be E, Q or Qdiv");
}

Outcome gorenstein_agreement(const Params& p) {
  const SSeq s = get_seq(p);
  const auto g = gorenstein_check(s);
  const std::string arith = yes_no(g.c.has_value());
  std::vector<std::string> lhs, rhs;
  std::string notes = g.c ? "arithmetic condition holds" : "arithmetic condition fails at index " + std::to_string(*g.failing_index);
  if (product_of(s) <= 100000) {
    lhs = {arith, arith};
    rhs = {yes_no(self_reciprocity_check(s)), yes_no(palindromic_center(inflated_divided(s), var::x).has_value())};
  } else {
    notes += "; product of s above 10^5, symmetry routes not run";
  }
  if (p.contains("expect")) {
    lhs.push_back(arith);
    rhs.push_back(p.at("expect").get<std::string>() == "gorenstein" ? "yes" : "no");
  }
  Outcome o = compare_values(lhs, rhs, "arithmetic condition", "parallelepiped symmetry, palindromic quotient, expectation");
  o.notes = notes;
  return o;
}

std::vector<Params> gorenstein_cases(std::uint64_t seed) {
  std::vector<Params> v = sample(seed ^ 0x474f, 100, 5, 9);
  v.push_back({{"s", "3,5"}, {"expect", "gorenstein"}});
  v.push_back({{"s", "5,2"}, {"expect", "not"}});
  const std::vector<std::int64_t> fib{1, 1, 2, 3, 5, 8, 13};
  for (std::size_t n = 1; n <= fib.size(); ++n)
    v.push_back({{"s", seq_param(make_explicit({fib.begin(), fib.begin() + static_cast<std::ptrdiff_t>(n)}))},
                 {"expect", n >= 5 ? "not" : "gorenstein"}});
  for (std::int64_t l = 2; l <= 5; ++l)
    for (std::size_t n = 1; n <= 8; ++n) v.push_back({{"s", seq_param(make_family(Family::ell, {l}, n))}, {"expect", "gorenstein"}});
  for (std::int64_t k = 1; k <= 3; ++k)
    for (std::int64_t n = 1; n <= 3; ++n) {
      std::vector<std::int64_t> m;
      for (std::int64_t i = 1; i <= n; ++i) m.push_back(i * k);
      v.push_back({{"s", seq_param(make_explicit(m))}, {"expect", "gorenstein"}});
    }
  return v;
}

}  // namespace

void add_geometry_theorems(std::vector<Entry>& out) {
  out.push_back({"PI_IDENTITIES", "lattice points of Pi_n(s) or Pi'_n(s) by last coordinate",
                 "E_n^(s), Q_n^(s) or Q_n^(s)/(1+...+x^{s_n-1}) from inversion sequences", false, {},
                 [](std::uint64_t seed) {
                   std::vector<Params> v;
                   for (auto p : sample(seed ^ 0x5049, 25, 4, 6))
                     for (const char* f : {"E", "Q", "Qdiv"}) {
                       p["form"] = f;
                       v.push_back(p);
                     }
                   return v;
                 },
                 [](const Params& p, const Caps&) { return parallelepiped_identity(get_seq(p), get_str(p, "form", "E")); }});

  out.push_back({"LPTGF", "sum over L^(s) of z_1^{l_1} ... z_n^{l_n} by enumeration",
                 "sum over Pi_n(s) of z^lambda / prod (1 - z^{v_i})", false, {},
                 [](std::uint64_t seed) {
                   std::vector<Params> v{{{"s", "2,3"}}};
                   for (const auto& p : sample(seed ^ 0x4c50, 20, 3, 5)) v.push_back(p);
                   return v;
                 },
                 [](const Params& p, const Caps& given) {
                   const SSeq s = get_seq(p);
                   Caps caps;
                   for (std::size_t i = 0; i < s.size(); ++i) {
                     const int v = var::zi(static_cast<int>(i) + 1);
                     caps[v] = given.count(v) ? given.at(v) : 12;
                   }
                   int top = 0;
                   for (const auto& [v, c] : caps) top = std::max(top, c);
                   SparsePoly lhs;
                   for_each_member(s, {std::nullopt, top - 1, std::nullopt}, [&](const Parts& lam) {
                     std::vector<std::pair<int, int>> e;
                     for (std::size_t i = 0; i < lam.size(); ++i)
                       if (lam[i] > 0) e.emplace_back(var::zi(static_cast<int>(i) + 1), static_cast<int>(lam[i]));
                     const Monomial m = Monomial::from_pairs(e);
                     if (below_caps(m, caps)) lhs.add_term(m, 1);
                   });
                   return compare_polys(lhs, lattice_gf(s).expand(caps).poly(), caps, "enumeration of L^(s)",
                                        "parallelepiped generating function");
                 }});

  out.push_back({"EHRHART", "h*(x) from interpolated |tP cap Z^n|", "E_n^(s)(x) from ascents over I^(s)", false, {},
                 [](std::uint64_t seed) {
                   std::vector<Params> v{{{"s", "1,2,3,4,5,6"}}, {{"s", "2,4,6,8,10"}}};
                   for (const auto& p : sample(seed ^ 0x4548, 50, 4, 5)) v.push_back(p);
                   return v;
                 },
                 [](const Params& p, const Caps&) {
                   const SSeq s = get_seq(p);
                   return compare_polys(h_star(s), s_eulerian(s), {}, "Ehrhart h*-polynomial", "s-Eulerian polynomial");
                 }});

  out.push_back({"GOR_EQUIV", "arithmetic Gorenstein condition on s",
                 "symmetry of Pi_n(s) and palindromy of Q_n^(s)/(1+...+x^{s_n-1})", false, {}, gorenstein_cases,
                 [](const Params& p, const Caps&) { return gorenstein_agreement(p); }});

  out.push_back({"ONLY_ELL_FINITE", "Gorenstein pattern of s_j = l s_{j-1} + m s_{j-2} for n = 1..10",
                 "all pass iff m = -1; otherwise fails from some n0 <= 10 on", true, {},
                 [](std::uint64_t) {
                   std::vector<Params> v;
                   for (auto [l, m] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {3, 2}, {2, -1}, {3, -1}, {4, -1}, {5, -1}})
                     v.push_back({{"l", l}, {"m", m}});
                   return v;
                 },
                 [](const Params& p, const Caps&) {
                   const auto l = get_int(p, "l"), m = get_int(p, "m");
                   if (l <= 0 || !(m > 0 || (m != 0 && std::abs(m) < l)))
                     throw std::invalid_argument("need l > 0 and either m > 0 or 0 < |m| < l");
                   std::string pattern;
                   for (std::size_t n = 1; n <= 10; ++n)
                     pattern += gorenstein_check(linear_recurrence_sequence(l, m, n)).c ? 'G' : '-';
                   const auto first_fail = pattern.find('-');
                   std::vector<std::string> lhs, rhs;
                   if (m == -1) {
                     lhs = {yes_no(first_fail == std::string::npos)};
                     rhs = {"yes"};
                   } else {
                     const bool stays = first_fail != std::string::npos && pattern.find('G', first_fail) == std::string::npos;
                     lhs = {yes_no(first_fail != std::string::npos), yes_no(stays)};
                     rhs = {"yes", "yes"};
                   }
                   Outcome o = compare_values(lhs, rhs, "observed pattern", "pattern required by the theorem");
                   o.notes = "n=1..10: " + pattern;
                   return o;
                 }});
}

}  // namespace lhp::harness::detail
