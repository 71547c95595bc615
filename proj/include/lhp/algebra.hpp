#pragma once

// Exact sparse polynomials and truncated power series over arbitrary-precision
// integers, plus dense rational polynomials for Sturm chains and interpolation.

#include <gmpxx.h>

#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lhp {

using Int = mpz_class;
using Rational = mpq_class;

// Variable ids. The fixed ids give a stable printing order; z1, z2, ... are
// laid out after z_base so that they sort behind every named variable.
namespace var {
inline constexpr int q = 0;
inline constexpr int x = 1;
inline constexpr int u = 2;
inline constexpr int v = 3;
inline constexpr int z = 4;
inline constexpr int y = 5;
inline constexpr int t = 6;
inline constexpr int w = 7;
inline constexpr int z_base = 16;
constexpr int zi(int i) { return z_base + i; }
}  // namespace var

std::string var_name(int id);
/// Parses "q", "x", "u", "v", "z", "y", "t", "w" or "z<i>".
int var_id(std::string_view name);

/// Raised when an exact division would leave a remainder.
class InexactDivision : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class Monomial {
 public:
  using Exponents = std::vector<std::pair<int, int>>;

  Monomial() = default;
  Monomial(std::initializer_list<std::pair<int, int>> exps);
  /// Pairs in any order; repeated variables are merged, zero exponents dropped.
  static Monomial from_pairs(std::span<const std::pair<int, int>> exps);
  static Monomial of(int var, int exp = 1);

  int exponent(int var) const;
  int degree() const;
  bool is_unit() const { return exps_.empty(); }
  const Exponents& exponents() const { return exps_; }

  Monomial operator*(const Monomial& o) const;
  Monomial pow(int k) const;
  /// this / o when o divides this.
  std::optional<Monomial> divide(const Monomial& o) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  std::string to_string() const;

 private:
  Exponents exps_;  // sorted by variable id, every exponent > 0
};

/// Graded order; within a degree the monomial with the larger exponent in
/// the lowest variable id comes first. It is a monomial order, so the last
/// term of a polynomial is its leading term for division.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

class SparsePoly {
 public:
  using Terms = std::map<Monomial, Int, MonomialOrder>;

  SparsePoly() = default;
  SparsePoly(long c);  // NOLINT(google-explicit-constructor)
  SparsePoly(const Int& c);  // NOLINT(google-explicit-constructor)
  static SparsePoly monomial(const Monomial& m, const Int& c = 1);
  static SparsePoly variable(int var, int exp = 1);
  /// Dense coefficient list in one variable, index = exponent.
  static SparsePoly from_dense(int var, std::span<const Int> coeffs);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Int coeff(const Monomial& m) const;
  void add_term(const Monomial& m, const Int& c);

  SparsePoly& operator+=(const SparsePoly& o);
  SparsePoly& operator-=(const SparsePoly& o);
  SparsePoly& operator*=(const SparsePoly& o);
  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
  SparsePoly operator-() const;
  friend bool operator==(const SparsePoly& a, const SparsePoly& b) { return a.terms_ == b.terms_; }

  SparsePoly pow(int k) const;
  SparsePoly times_monomial(const Monomial& m) const;
  /// Replaces every occurrence of var by the monomial m.
  SparsePoly substitute(int var, const Monomial& m) const;
  /// Sets var to an integer value.
  SparsePoly evaluate(int var, long value) const;
  Int evaluate_all(long value) const;

  int degree_in(int var) const;
  int total_degree() const;
  bool is_univariate_in(int var) const;
  /// Coefficients of a polynomial in var alone; throws if other variables occur.
  std::vector<Int> dense(int var) const;
  std::vector<int> variables() const;

  std::string to_string() const;

 private:
  Terms terms_;
};

/// Exact multivariate division; throws InexactDivision on a nonzero remainder.
SparsePoly divide_exact(const SparsePoly& a, const SparsePoly& b);

SparsePoly q_int(int n, int var = var::q);
SparsePoly q_factorial(int n, int var = var::q);
/// Gaussian binomial by exact division of q-factorials; zero when k > n.
SparsePoly q_binomial(int n, int k, int var = var::q);

// ---------------------------------------------------------------------------
// Truncated series

/// Exclusive per-variable truncation orders. Absent variables are uncapped.
using Caps = std::map<int, int>;

Caps merge_caps(const Caps& a, const Caps& b);
bool below_caps(const Monomial& m, const Caps& caps);
/// Parses "q=30,u=20,x=10".
Caps parse_caps(std::string_view text);
std::string caps_to_string(const Caps& caps);

class TruncSeries {
 public:
  TruncSeries() = default;
  TruncSeries(SparsePoly p, Caps caps);
  static TruncSeries one(const Caps& caps) { return {SparsePoly(1), caps}; }

  const SparsePoly& poly() const { return poly_; }
  const Caps& caps() const { return caps_; }
  Int coeff(const Monomial& m) const { return poly_.coeff(m); }

  friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b);
  friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b);
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
  friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
    return a.caps_ == b.caps_ && a.poly_ == b.poly_;
  }

  /// this / (1 - sign*m), expanded geometrically under the caps.
  TruncSeries div_one_minus(const Monomial& m, int sign = 1) const;
  /// this * (1 - sign*m).
  TruncSeries mul_one_minus(const Monomial& m, int sign = 1) const;
  /// Re-truncates under tighter caps.
  TruncSeries restrict_to(const Caps& caps) const;

 private:
  SparsePoly poly_;
  Caps caps_;
};

TruncSeries series_add(const TruncSeries& a, const TruncSeries& b);
TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b);
/// a / b under the merged caps. A unit constant term in b gives series
/// division; otherwise the polynomials must divide exactly.
TruncSeries series_divide_exact(const TruncSeries& a, const TruncSeries& b);

struct SignedMonomial {
  int sign = 1;
  Monomial mono;
};

/// (a; q)_n = prod_{i<n} (1 - a q^i); n == nullopt means the infinite product,
/// which requires a cap on qvar.
TruncSeries pochhammer(const SignedMonomial& a, int qvar, std::optional<int> n, const Caps& caps);
/// 1 / (a; q)_n under caps.
TruncSeries inverse_pochhammer(const SignedMonomial& a, int qvar, std::optional<int> n,
                               const Caps& caps);
/// Geometric expansion of 1/(1 - m); m must be non-unit with a capped variable.
TruncSeries invert_factor(const Monomial& m, const Caps& caps);

// ---------------------------------------------------------------------------
// Univariate facts

struct Palindrome {
  int center_degree;
  int sign;
  friend bool operator==(const Palindrome&, const Palindrome&) = default;
};

/// (d, sign) with x^d p(1/x) = sign * p(x), if any.
std::optional<Palindrome> palindromic_center(const SparsePoly& p, int var);

class RationalPoly {
 public:
  RationalPoly() = default;
  explicit RationalPoly(std::vector<Rational> coeffs);
  static RationalPoly from_sparse(const SparsePoly& p, int var);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return c_; }
  Rational coeff(int i) const;
  const Rational& leading() const { return c_.back(); }

  Rational operator()(const Rational& t) const;
  RationalPoly derivative() const;

  friend RationalPoly operator+(const RationalPoly& a, const RationalPoly& b);
  friend RationalPoly operator-(const RationalPoly& a, const RationalPoly& b);
  friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b);
  friend bool operator==(const RationalPoly&, const RationalPoly&) = default;

  /// Quotient and remainder; throws std::domain_error on a zero divisor.
  std::pair<RationalPoly, RationalPoly> divmod(const RationalPoly& d) const;
  RationalPoly monic() const;
  std::string to_string(std::string_view var = "t") const;

 private:
  void normalize();
  std::vector<Rational> c_;
};

RationalPoly poly_gcd(RationalPoly a, RationalPoly b);

struct RootCount {
  int distinct_real_roots;
  int degree_squarefree;
  bool real_rooted() const { return distinct_real_roots == degree_squarefree; }
};

/// Sturm count of distinct real roots of the square-free part.
RootCount real_root_count(const SparsePoly& p, int var);

/// Unique polynomial of degree < points.size() through the points.
RationalPoly interpolate(std::span<const std::pair<long, Int>> points);

}  // namespace lhp
