#include <algorithm>
#include <set>

#include "lhp/algebra.hpp"

namespace lhp {

SparsePoly::SparsePoly(long c) {
  if (c != 0) terms_.emplace(Monomial{}, Int(c));
}

SparsePoly::SparsePoly(const Int& c) {
  if (c != 0) terms_.emplace(Monomial{}, c);
}

SparsePoly SparsePoly::monomial(const Monomial& m, const Int& c) {
  SparsePoly p;
  p.add_term(m, c);
  return p;
}

SparsePoly SparsePoly::variable(int var, int exp) { return monomial(Monomial::of(var, exp)); }

SparsePoly SparsePoly::from_dense(int var, std::span<const Int> coeffs) {
  SparsePoly p;
  for (std::size_t i = 0; i < coeffs.size(); ++i) p.add_term(Monomial::of(var, static_cast<int>(i)), coeffs[i]);
  return p;
}

Int SparsePoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Int(0) : it->second;
}

void SparsePoly::add_term(const Monomial& m, const Int& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
  SparsePoly r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

SparsePoly& SparsePoly::operator*=(const SparsePoly& o) { return *this = *this * o; }

SparsePoly SparsePoly::operator-() const {
  SparsePoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

SparsePoly SparsePoly::pow(int k) const {
  if (k < 0) throw std::invalid_argument("negative polynomial power");
  SparsePoly result(1);
  SparsePoly base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return result;
}

SparsePoly SparsePoly::times_monomial(const Monomial& m) const {
  SparsePoly r;
  for (const auto& [mm, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), mm * m, c);
  return r;
}

SparsePoly SparsePoly::substitute(int var, const Monomial& m) const {
  SparsePoly r;
  for (const auto& [mm, c] : terms_) {
    const int e = mm.exponent(var);
    if (e == 0) {
      r.add_term(mm, c);
      continue;
    }
    Monomial rest = *mm.divide(Monomial::of(var, e));
    r.add_term(rest * m.pow(e), c);
  }
  return r;
}

SparsePoly SparsePoly::evaluate(int var, long value) const {
  SparsePoly r;
  for (const auto& [mm, c] : terms_) {
    const int e = mm.exponent(var);
    if (e == 0) {
      r.add_term(mm, c);
      continue;
    }
    Int f;
    mpz_pow_ui(f.get_mpz_t(), Int(value).get_mpz_t(), static_cast<unsigned long>(e));
    r.add_term(*mm.divide(Monomial::of(var, e)), c * f);
  }
  return r;
}

Int SparsePoly::evaluate_all(long value) const {
  Int total = 0;
  for (const auto& [mm, c] : terms_) {
    Int f;
    mpz_pow_ui(f.get_mpz_t(), Int(value).get_mpz_t(), static_cast<unsigned long>(mm.degree()));
    total += c * f;
  }
  return total;
}

int SparsePoly::degree_in(int var) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(var));
  return d;
}

int SparsePoly::total_degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.degree(); }

bool SparsePoly::is_univariate_in(int var) const {
  return std::all_of(terms_.begin(), terms_.end(), [var](const auto& t) {
    const auto& e = t.first.exponents();
    return e.empty() || (e.size() == 1 && e.front().first == var);
  });
}

std::vector<Int> SparsePoly::dense(int var) const {
  if (!is_univariate_in(var)) throw std::invalid_argument("polynomial is not univariate in " + var_name(var));
  std::vector<Int> out(static_cast<std::size_t>(degree_in(var) + 1));
  for (const auto& [m, c] : terms_) out[static_cast<std::size_t>(m.exponent(var))] = c;
  return out;
}

std::vector<int> SparsePoly::variables() const {
  std::set<int> vs;
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m.exponents()) vs.insert(v);
  return {vs.begin(), vs.end()};
}

std::string SparsePoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool neg = c < 0;
    Int mag = neg ? Int(-c) : c;
    if (first)
      s += neg ? "-" : "";
    else
      s += neg ? " - " : " + ";
    first = false;
    if (m.is_unit()) {
      s += mag.get_str();
    } else {
      if (mag != 1) s += mag.get_str() + "*";
      s += m.to_string();
    }
  }
  return s;
}

SparsePoly divide_exact(const SparsePoly& a, const SparsePoly& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  const auto& [lead_m, lead_c] = *b.terms().rbegin();
  SparsePoly quotient;
  SparsePoly rem = a;
  while (!rem.is_zero()) {
    const auto& [rm, rc] = *rem.terms().rbegin();
    auto mq = rm.divide(lead_m);
    if (!mq || !mpz_divisible_p(rc.get_mpz_t(), lead_c.get_mpz_t()))
      throw InexactDivision("inexact division: remainder term " + rm.to_string());
    Int cq = rc / lead_c;
    SparsePoly step = SparsePoly::monomial(*mq, cq);
    quotient += step;
    rem -= step * b;
  }
  return quotient;
}

SparsePoly q_int(int n, int var) {
  if (n < 0) throw std::invalid_argument("q_int requires n >= 0");
  SparsePoly p;
  for (int i = 0; i < n; ++i) p.add_term(Monomial::of(var, i), 1);
  return p;
}

SparsePoly q_factorial(int n, int var) {
  SparsePoly p(1);
  for (int i = 1; i <= n; ++i) p *= q_int(i, var);
  return p;
}

SparsePoly q_binomial(int n, int k, int var) {
  if (n < 0 || k < 0) throw std::invalid_argument("q_binomial requires n, k >= 0");
  if (k > n) return {};
  return divide_exact(q_factorial(n, var), q_factorial(k, var) * q_factorial(n - k, var));
}

}  // namespace lhp
