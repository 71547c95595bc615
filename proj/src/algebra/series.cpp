#include <algorithm>
#include <charconv>

#include "lhp/algebra.hpp"

namespace lhp {

Caps merge_caps(const Caps& a, const Caps& b) {
  Caps out = a;
  for (const auto& [v, c] : b) {
    auto [it, inserted] = out.try_emplace(v, c);
    if (!inserted) it->second = std::min(it->second, c);
  }
  return out;
}

bool below_caps(const Monomial& m, const Caps& caps) {
  for (const auto& [v, e] : m.exponents()) {
    auto it = caps.find(v);
    if (it != caps.end() && e >= it->second) return false;
  }
  return true;
}

Caps parse_caps(std::string_view text) {
  Caps caps;
  while (!text.empty()) {
    auto comma = text.find(',');
    std::string_view item = text.substr(0, comma);
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string_view::npos) throw std::invalid_argument("cap '" + std::string(item) + "' lacks '='");
    int value = 0;
    auto rhs = item.substr(eq + 1);
    auto [ptr, ec] = std::from_chars(rhs.data(), rhs.data() + rhs.size(), value);
    if (ec != std::errc() || ptr != rhs.data() + rhs.size() || value < 0)
      throw std::invalid_argument("bad cap value in '" + std::string(item) + "'");
    caps[var_id(item.substr(0, eq))] = value;
  }
  return caps;
}

std::string caps_to_string(const Caps& caps) {
  std::string s;
  for (const auto& [v, c] : caps) {
    if (!s.empty()) s += ',';
    s += var_name(v) + "=" + std::to_string(c);
  }
  return s;
}

namespace {

SparsePoly truncate(const SparsePoly& p, const Caps& caps) {
  SparsePoly out;
  for (const auto& [m, c] : p.terms())
    if (below_caps(m, caps)) out.add_term(m, c);
  return out;
}

SparsePoly truncated_product(const SparsePoly& a, const SparsePoly& b, const Caps& caps) {
  SparsePoly out;
  for (const auto& [ma, ca] : a.terms()) {
    if (!below_caps(ma, caps)) continue;
    for (const auto& [mb, cb] : b.terms()) {
      Monomial m = ma * mb;
      if (below_caps(m, caps)) out.add_term(m, ca * cb);
    }
  }
  return out;
}

bool touches_cap(const Monomial& m, const Caps& caps) {
  return std::any_of(m.exponents().begin(), m.exponents().end(),
                     [&](const auto& p) { return caps.count(p.first) > 0; });
}

}  // namespace

TruncSeries::TruncSeries(SparsePoly p, Caps caps) : poly_(truncate(p, caps)), caps_(std::move(caps)) {}

TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
  return {a.poly_ + b.poly_, merge_caps(a.caps_, b.caps_)};
}

TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
  return {a.poly_ - b.poly_, merge_caps(a.caps_, b.caps_)};
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
  Caps caps = merge_caps(a.caps_, b.caps_);
  TruncSeries r;
  r.poly_ = truncated_product(a.poly_, b.poly_, caps);
  r.caps_ = std::move(caps);
  return r;
}

TruncSeries TruncSeries::div_one_minus(const Monomial& m, int sign) const {
  if (m.is_unit()) throw std::domain_error("1/(1 - m) with unit m is not a power series");
  if (!touches_cap(m, caps_)) throw std::domain_error("1/(1 - " + m.to_string() + ") needs a capped variable");
  TruncSeries r;
  r.caps_ = caps_;
  r.poly_ = poly_;
  SparsePoly term = poly_;
  const SparsePoly step = SparsePoly::monomial(m, sign);
  while (!term.is_zero()) {
    term = truncated_product(term, step, caps_);
    r.poly_ += term;
  }
  return r;
}

TruncSeries TruncSeries::mul_one_minus(const Monomial& m, int sign) const {
  TruncSeries r;
  r.caps_ = caps_;
  r.poly_ = poly_ - truncated_product(poly_, SparsePoly::monomial(m, sign), caps_);
  return r;
}

TruncSeries TruncSeries::restrict_to(const Caps& caps) const { return {poly_, merge_caps(caps_, caps)}; }

TruncSeries series_add(const TruncSeries& a, const TruncSeries& b) { return a + b; }
TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b) { return a * b; }

TruncSeries series_divide_exact(const TruncSeries& a, const TruncSeries& b) {
  const Caps caps = merge_caps(a.caps(), b.caps());
  const Int c0 = b.coeff(Monomial{});
  if (c0 == 1 || c0 == -1) {
    // r = c0 * (a - (b - c0) r); each pass fixes one more degree in the capped variables.
    SparsePoly tail = b.poly() - SparsePoly(c0);
    for (const auto& [m, c] : tail.terms())
      if (!touches_cap(m, caps))
        throw std::domain_error("series division needs every non-constant divisor term to be capped");
    SparsePoly r = TruncSeries(a.poly(), caps).poly();
    for (;;) {
      SparsePoly next = (a.poly() - truncated_product(tail, r, caps)) * SparsePoly(c0);
      next = TruncSeries(next, caps).poly();
      if (next == r) break;
      r = std::move(next);
    }
    return {r, caps};
  }
  return {divide_exact(a.poly(), b.poly()), caps};
}

TruncSeries invert_factor(const Monomial& m, const Caps& caps) { return TruncSeries::one(caps).div_one_minus(m); }

namespace {

template <typename Step>
TruncSeries pochhammer_walk(const SignedMonomial& a, int qvar, std::optional<int> n, const Caps& caps, Step step) {
  if (!n && !caps.count(qvar)) throw std::domain_error("infinite product needs a cap on " + var_name(qvar));
  if (n && *n < 0) throw std::invalid_argument("negative Pochhammer length");
  TruncSeries r = TruncSeries::one(caps);
  for (int i = 0; !n || i < *n; ++i) {
    Monomial m = a.mono * Monomial::of(qvar, i);
    // Later factors only raise the q-exponent, so they are invisible too.
    if (!below_caps(m, caps)) break;
    r = step(r, m, a.sign);
  }
  return r;
}

}  // namespace

TruncSeries pochhammer(const SignedMonomial& a, int qvar, std::optional<int> n, const Caps& caps) {
  return pochhammer_walk(a, qvar, n, caps,
                         [](const TruncSeries& r, const Monomial& m, int s) { return r.mul_one_minus(m, s); });
}

TruncSeries inverse_pochhammer(const SignedMonomial& a, int qvar, std::optional<int> n, const Caps& caps) {
  return pochhammer_walk(a, qvar, n, caps, [](const TruncSeries& r, const Monomial& m, int s) {
    if (m.is_unit()) throw std::domain_error("1/(a;q)_n has a factor 1 - 1");
    return r.div_one_minus(m, s);
  });
}

std::optional<Palindrome> palindromic_center(const SparsePoly& p, int var) {
  const auto c = p.dense(var);
  if (p.is_zero()) return std::nullopt;
  std::size_t lo = 0;
  while (c[lo] == 0) ++lo;
  const std::size_t hi = c.size() - 1;
  int sign = 0;
  if (c[hi] == c[lo])
    sign = 1;
  else if (c[hi] == -c[lo])
    sign = -1;
  else
    return std::nullopt;
  for (std::size_t i = lo; i <= hi; ++i)
    if (c[i] != sign * c[lo + hi - i]) return std::nullopt;
  return Palindrome{static_cast<int>(lo + hi), sign};
}

}  // namespace lhp
