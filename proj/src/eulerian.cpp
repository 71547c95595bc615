#include "lhp/eulerian.hpp"

#include <stdexcept>

#include "lhp/budget.hpp"
#include "lhp/statistics.hpp"

namespace lhp {

namespace {

void check_budget(const SSeq& s) {
  Int count = 1;
  for (auto v : s.values) count *= Int(std::to_string(v));
  require_within_budget(count, "I_n^(s) for s=" + s.to_string());
}

SparsePoly from_histogram(const std::vector<Int>& h) { return SparsePoly::from_dense(var::x, h); }

void bump(std::vector<Int>& h, std::int64_t exp) {
  if (exp < 0) throw std::logic_error("negative exponent in an Eulerian sum");
  if (static_cast<std::size_t>(exp) >= h.size()) h.resize(static_cast<std::size_t>(exp) + 1, 0);
  h[static_cast<std::size_t>(exp)] += 1;
}

}  // namespace

SparsePoly s_eulerian(const SSeq& s) {
  check_budget(s);
  std::vector<Int> h;
  for_each_invseq(s, [&](const InvSeq& e) { bump(h, static_cast<std::int64_t>(ascent_set(e, s).size())); });
  return from_histogram(h);
}

SparsePoly inflated_eulerian(const SSeq& s) {
  if (s.size() == 0) return SparsePoly(1);
  check_budget(s);
  const std::int64_t sn = s.values.back();
  std::vector<Int> h;
  for_each_invseq(s, [&](const InvSeq& e) {
    bump(h, sn * static_cast<std::int64_t>(ascent_set(e, s).size()) - e.back());
  });
  return from_histogram(h);
}

SparsePoly inflated_divided(const SSeq& s) {
  const std::size_t n = s.size();
  if (n == 0) throw std::invalid_argument("inflated_divided needs n >= 1");
  const std::int64_t sn = s.values.back();
  const SSeq prefix = s.prefix(n - 1);
  check_budget(prefix);
  std::vector<Int> h;
  for_each_invseq(prefix, [&](const InvSeq& e) {
    // n = 1: the single empty sequence, read with e_0 = 0, s_0 = 1
    const std::int64_t last_e = n == 1 ? 0 : e.back();
    const std::int64_t last_s = n == 1 ? 1 : prefix.values.back();
    const std::int64_t fl = sn * last_e / last_s;
    bump(h, sn * static_cast<std::int64_t>(ascent_set(e, prefix).size()) - fl);
  });
  SparsePoly d = from_histogram(h);
  if (d * q_int(static_cast<int>(sn), var::x) != inflated_eulerian(s))
    throw std::logic_error("inflated_divided: product with 1+...+x^{s_n-1} differs from Q for s=" + s.to_string());
  return d;
}

SparsePoly one_k_eulerian(int n, std::int64_t k) {
  if (n < 1 || k < 1) throw std::invalid_argument("one_k_eulerian needs n, k >= 1");
  return s_eulerian(make_family(Family::one_mod_k, {k}, static_cast<std::size_t>(n)));
}

bool is_real_rooted(const SparsePoly& p, int var) {
  if (p.is_zero()) throw std::domain_error("is_real_rooted of the zero polynomial");
  if (!p.is_univariate_in(var)) throw std::invalid_argument("is_real_rooted needs a univariate polynomial");
  return real_root_count(p, var).real_rooted();
}

}  // namespace lhp
