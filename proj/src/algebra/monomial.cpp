#include "lhp/algebra.hpp"

#include <algorithm>
#include <charconv>

namespace lhp {

namespace {

constexpr std::pair<int, const char*> kNamed[] = {
    {var::q, "q"}, {var::x, "x"}, {var::u, "u"}, {var::v, "v"},
    {var::z, "z"}, {var::y, "y"}, {var::t, "t"}, {var::w, "w"},
};

}  // namespace

std::string var_name(int id) {
  for (const auto& [k, name] : kNamed)
    if (k == id) return name;
  if (id > var::z_base) return "z" + std::to_string(id - var::z_base);
  return "X" + std::to_string(id);
}

int var_id(std::string_view name) {
  for (const auto& [k, n] : kNamed)
    if (name == n) return k;
  if (name.size() > 1 && name[0] == 'z') {
    int i = 0;
    auto [ptr, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), i);
    if (ec == std::errc() && ptr == name.data() + name.size() && i >= 1) return var::zi(i);
  }
  throw std::invalid_argument("unknown variable '" + std::string(name) + "'");
}

Monomial::Monomial(std::initializer_list<std::pair<int, int>> exps)
    : Monomial(from_pairs({exps.begin(), exps.size()})) {}

Monomial Monomial::from_pairs(std::span<const std::pair<int, int>> exps) {
  Monomial m;
  auto& out = m.exps_;
  for (const auto& [v, e] : exps) {
    if (e < 0) throw std::invalid_argument("negative exponent in monomial");
    if (e == 0) continue;
    auto it = std::lower_bound(out.begin(), out.end(), v, [](const auto& p, int key) { return p.first < key; });
    if (it != out.end() && it->first == v)
      it->second += e;
    else
      out.insert(it, {v, e});
  }
  return m;
}

Monomial Monomial::of(int var, int exp) { return Monomial{{var, exp}}; }

int Monomial::exponent(int var) const {
  for (const auto& [v, e] : exps_)
    if (v == var) return e;
  return 0;
}

int Monomial::degree() const {
  int d = 0;
  for (const auto& p : exps_) d += p.second;
  return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  r.exps_.reserve(exps_.size() + o.exps_.size());
  auto a = exps_.begin();
  auto b = o.exps_.begin();
  while (a != exps_.end() || b != o.exps_.end()) {
    if (b == o.exps_.end() || (a != exps_.end() && a->first < b->first)) {
      r.exps_.push_back(*a++);
    } else if (a == exps_.end() || b->first < a->first) {
      r.exps_.push_back(*b++);
    } else {
      r.exps_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  return r;
}

Monomial Monomial::pow(int k) const {
  if (k < 0) throw std::invalid_argument("negative monomial power");
  Monomial r;
  if (k == 0) return r;
  r.exps_ = exps_;
  for (auto& p : r.exps_) p.second *= k;
  return r;
}

std::optional<Monomial> Monomial::divide(const Monomial& o) const {
  Monomial r = *this;
  for (const auto& [v, e] : o.exps_) {
    auto it = std::find_if(r.exps_.begin(), r.exps_.end(), [v](const auto& p) { return p.first == v; });
    if (it == r.exps_.end() || it->second < e) return std::nullopt;
    it->second -= e;
    if (it->second == 0) r.exps_.erase(it);
  }
  return r;
}

std::string Monomial::to_string() const {
  if (exps_.empty()) return "1";
  std::string s;
  for (const auto& [v, e] : exps_) {
    if (!s.empty()) s += '*';
    s += var_name(v);
    if (e != 1) s += '^' + std::to_string(e);
  }
  return s;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
  const int da = a.degree();
  const int db = b.degree();
  if (da != db) return da < db;
  const auto& ea = a.exponents();
  const auto& eb = b.exponents();
  std::size_t i = 0;
  for (; i < ea.size() && i < eb.size(); ++i) {
    if (ea[i].first != eb[i].first) return ea[i].first < eb[i].first;
    if (ea[i].second != eb[i].second) return ea[i].second > eb[i].second;
  }
  // Equal degree with a common prefix means both are exhausted together.
  return false;
}

}  // namespace lhp
