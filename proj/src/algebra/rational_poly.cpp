#include <set>

#include "lhp/algebra.hpp"

namespace lhp {

RationalPoly::RationalPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }

RationalPoly RationalPoly::from_sparse(const SparsePoly& p, int var) {
  std::vector<Rational> c;
  for (const auto& v : p.dense(var)) c.emplace_back(v);
  return RationalPoly(std::move(c));
}

void RationalPoly::normalize() {
  for (auto& x : c_) x.canonicalize();
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational RationalPoly::coeff(int i) const {
  return i >= 0 && i < static_cast<int>(c_.size()) ? c_[static_cast<std::size_t>(i)] : Rational(0);
}

Rational RationalPoly::operator()(const Rational& t) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

RationalPoly RationalPoly::derivative() const {
  std::vector<Rational> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<long>(i));
  return RationalPoly(std::move(d));
}

RationalPoly operator+(const RationalPoly& a, const RationalPoly& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
  return RationalPoly(std::move(c));
}

RationalPoly operator-(const RationalPoly& a, const RationalPoly& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
  return RationalPoly(std::move(c));
}

RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return RationalPoly(std::move(c));
}

std::pair<RationalPoly, RationalPoly> RationalPoly::divmod(const RationalPoly& d) const {
  if (d.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem = c_;
  if (degree() < d.degree()) return {RationalPoly{}, *this};
  std::vector<Rational> quot(static_cast<std::size_t>(degree() - d.degree() + 1));
  for (int i = degree(); i >= d.degree(); --i) {
    Rational f = rem[static_cast<std::size_t>(i)] / d.leading();
    quot[static_cast<std::size_t>(i - d.degree())] = f;
    if (f == 0) continue;
    for (int j = 0; j <= d.degree(); ++j) rem[static_cast<std::size_t>(i - d.degree() + j)] -= f * d.c_[static_cast<std::size_t>(j)];
  }
  return {RationalPoly(std::move(quot)), RationalPoly(std::move(rem))};
}

RationalPoly RationalPoly::monic() const {
  if (is_zero()) return {};
  std::vector<Rational> c = c_;
  const Rational lead = leading();
  for (auto& x : c) x /= lead;
  return RationalPoly(std::move(c));
}

std::string RationalPoly::to_string(std::string_view var) const {
  if (c_.empty()) return "0";
  std::string s;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = c_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (s.empty())
      s += c < 0 ? "-" : "";
    else
      s += c < 0 ? " - " : " + ";
    if (i == 0 || mag != 1) {
      s += mag.get_str();
      if (i > 0) s += "*";
    }
    if (i > 0) s += std::string(var);
    if (i > 1) s += "^" + std::to_string(i);
  }
  return s;
}

RationalPoly poly_gcd(RationalPoly a, RationalPoly b) {
  while (!b.is_zero()) {
    auto r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

namespace {

int sign_at_infinity(const RationalPoly& p, bool positive) {
  if (p.is_zero()) return 0;
  int s = sgn(p.leading());
  if (!positive && p.degree() % 2 == 1) s = -s;
  return s;
}

int sign_changes(const std::vector<RationalPoly>& chain, bool positive) {
  int changes = 0;
  int last = 0;
  for (const auto& p : chain) {
    int s = sign_at_infinity(p, positive);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

RootCount real_root_count(const SparsePoly& p, int var) {
  if (p.is_zero()) throw std::domain_error("real_root_count of the zero polynomial");
  RationalPoly f = RationalPoly::from_sparse(p, var);
  RationalPoly g = poly_gcd(f, f.derivative());
  RationalPoly sf = f.divmod(g).first;
  std::vector<RationalPoly> chain{sf, sf.derivative()};
  while (!chain.back().is_zero()) {
    auto r = chain[chain.size() - 2].divmod(chain.back()).second;
    if (r.is_zero()) break;
    chain.push_back(RationalPoly{} - r);
  }
  return {sign_changes(chain, false) - sign_changes(chain, true), sf.degree()};
}

RationalPoly interpolate(std::span<const std::pair<long, Int>> points) {
  std::set<long> seen;
  for (const auto& pt : points)
    if (!seen.insert(pt.first).second) throw std::invalid_argument("interpolate: duplicate abscissa");
  RationalPoly result;
  for (std::size_t i = 0; i < points.size(); ++i) {
    RationalPoly basis(std::vector<Rational>{Rational(points[i].second)});
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (j == i) continue;
      Rational denom(points[i].first - points[j].first);
      basis = basis * RationalPoly(std::vector<Rational>{Rational(-points[j].first) / denom, Rational(1) / denom});
    }
    result = result + basis;
  }
  return result;
}

}  // namespace lhp
