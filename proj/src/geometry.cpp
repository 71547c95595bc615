#include "lhp/geometry.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "lhp/budget.hpp"
#include "lhp/statistics.hpp"

namespace lhp {

namespace {

void check_budget(const SSeq& s) {
  Int count = 1;
  for (auto v : s.values) count *= Int(std::to_string(v));
  require_within_budget(count, "parallelepiped of s=" + s.to_string());
}

/// Back-substitution in a basis whose vector i starts at coordinate i.
std::vector<Rational> coordinates(const ConeBasis& b, const IntVec& p) {
  const std::size_t n = p.size();
  std::vector<Rational> alpha(n);
  for (std::size_t j = 0; j < n; ++j) {
    Rational rest(p[j]);
    for (std::size_t i = 0; i < j; ++i) rest -= alpha[i] * Rational(b.vectors[i][j]);
    alpha[j] = rest / Rational(b.vectors[j][j]);
    alpha[j].canonicalize();
  }
  return alpha;
}

void alpha_check(const ConeBasis& b, const std::vector<IntVec>& points) {
  for (const auto& p : points)
    for (const auto& a : coordinates(b, p))
      if (a < 0 || a >= 1) throw std::logic_error("lattice point outside the half-open parallelepiped");
}

}  // namespace

Rational QuasiPoly::operator()(std::int64_t t) const {
  const std::int64_t r = ((t % period) + period) % period;
  return constituents.at(static_cast<std::size_t>(r))(Rational(t));
}

ConeBasis generators(const SSeq& s) {
  const std::size_t n = s.size();
  ConeBasis b;
  for (std::size_t i = 0; i < n; ++i) {
    IntVec v(n, 0);
    for (std::size_t j = i; j < n; ++j) v[j] = s[j];
    b.vectors.push_back(v);
  }
  return b;
}

ConeBasis generators_prime(const SSeq& s) {
  ConeBasis b = generators(s);
  if (!b.vectors.empty()) {
    auto& last = b.vectors.back();
    last.back() = 1;
  }
  return b;
}

PiPointSet pi_points(const SSeq& s) {
  check_budget(s);
  PiPointSet out;
  out.basis = generators(s);
  for_each_invseq(s, [&](const InvSeq& e) {
    const auto asc = ascent_set(e, s);
    IntVec lam(e.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
      // bars = ascents at positions 0..i (zero-based i is one-based i+1)
      while (k < asc.size() && static_cast<std::size_t>(asc[k]) <= i) ++k;
      lam[i] = s[i] * static_cast<std::int64_t>(k) - e[i];
    }
    out.points.push_back(std::move(lam));
  });
  std::sort(out.points.begin(), out.points.end());
  alpha_check(out.basis, out.points);
  return out;
}

PiPointSet pi_prime_points(const SSeq& s) {
  const std::size_t n = s.size();
  if (n == 0) throw std::invalid_argument("pi_prime_points needs n >= 1");
  PiPointSet out;
  out.basis = generators_prime(s);
  if (n == 1) {
    out.points.push_back({0});
    return out;
  }
  const std::int64_t sn = s[n - 1], sp = s[n - 2];
  for (auto p : pi_points(s.prefix(n - 1)).points) {
    // smallest lambda_n with lambda_{n-1}/s_{n-1} <= lambda_n/s_n
    p.push_back((sn * p.back() + sp - 1) / sp);
    out.points.push_back(std::move(p));
  }
  std::sort(out.points.begin(), out.points.end());
  alpha_check(out.basis, out.points);
  return out;
}

LatticeGf lattice_gf(const SSeq& s) {
  LatticeGf gf;
  std::vector<std::pair<int, int>> exps;
  auto as_monomial = [&](const IntVec& v) {
    exps.clear();
    for (std::size_t i = 0; i < v.size(); ++i) exps.emplace_back(var::zi(static_cast<int>(i) + 1), static_cast<int>(v[i]));
    return Monomial::from_pairs(exps);
  };
  for (const auto& p : pi_points(s).points) gf.numerator.add_term(as_monomial(p), 1);
  for (const auto& v : generators(s).vectors) gf.denominators.push_back(as_monomial(v));
  return gf;
}

TruncSeries LatticeGf::expand(const Caps& caps) const {
  TruncSeries r(numerator, caps);
  for (const auto& d : denominators) r = r.div_one_minus(d);
  return r;
}

Int count_last_bounded(const SSeq& s, std::int64_t T) {
  const std::size_t n = s.size();
  if (n == 0) return 1;
  if (T < 0) return 0;
  const std::int64_t sn = s[n - 1];
  // f[v] = number of valid prefixes ending with lambda_i = v, v <= T s_i / s_n
  auto bound = [&](std::size_t i) { return static_cast<std::int64_t>(static_cast<__int128>(T) * s[i] / sn); };
  std::vector<Int> f(static_cast<std::size_t>(bound(0)) + 1, 1);
  for (std::size_t i = 1; i < n; ++i) {
    std::vector<Int> prefix(f.size());
    std::partial_sum(f.begin(), f.end(), prefix.begin());
    std::vector<Int> g(static_cast<std::size_t>(bound(i)) + 1);
    for (std::size_t w = 0; w < g.size(); ++w) {
      // lambda_{i-1} <= floor(w s_{i-1} / s_i)
      auto top = static_cast<std::int64_t>(static_cast<__int128>(w) * s[i - 1] / s[i]);
      top = std::min<std::int64_t>(top, static_cast<std::int64_t>(f.size()) - 1);
      g[w] = prefix[static_cast<std::size_t>(top)];
    }
    f = std::move(g);
  }
  return std::accumulate(f.begin(), f.end(), Int(0));
}

RationalPoly ehrhart_poly_P(const SSeq& s) {
  const auto n = static_cast<long>(s.size());
  const std::int64_t sn = n == 0 ? 1 : s[static_cast<std::size_t>(n - 1)];
  std::vector<std::pair<long, Int>> pts;
  for (long t = 0; t <= n; ++t) pts.emplace_back(t, count_last_bounded(s, t * sn));
  RationalPoly p = interpolate(pts);
  for (long t = n + 1; t <= n + 2; ++t)
    if (p(Rational(t)) != Rational(count_last_bounded(s, t * sn)))
      throw std::logic_error("Ehrhart polynomial fit fails at t=" + std::to_string(t) + " for s=" + s.to_string());
  return p;
}

SparsePoly h_star(const SSeq& s) {
  const int n = static_cast<int>(s.size());
  const RationalPoly ip = ehrhart_poly_P(s);
  std::vector<Int> vals;
  for (int t = 0; t <= n; ++t) {
    Rational v = ip(Rational(t));
    if (v.get_den() != 1) throw std::logic_error("Ehrhart value is not an integer");
    vals.push_back(v.get_num());
  }
  // h*_j = sum_m (-1)^m C(n+1, m) i(j - m)
  std::vector<Int> h(static_cast<std::size_t>(n) + 1, 0);
  for (int j = 0; j <= n; ++j) {
    Int binom = 1;
    for (int m = 0; m <= j; ++m) {
      if (m > 0) binom = binom * (n + 2 - m) / m;
      const Int term = binom * vals[static_cast<std::size_t>(j - m)];
      h[static_cast<std::size_t>(j)] += m % 2 == 0 ? term : Int(-term);
    }
  }
  return SparsePoly::from_dense(var::x, h);
}

QuasiPoly ehrhart_quasi_R(const SSeq& s) {
  const auto n = static_cast<long>(s.size());
  QuasiPoly qp;
  qp.period = n == 0 ? 1 : s[static_cast<std::size_t>(n - 1)];
  for (std::int64_t r = 0; r < qp.period; ++r) {
    std::vector<std::pair<long, Int>> pts;
    for (long j = 0; j <= n; ++j) {
      const long t = static_cast<long>(r + j * qp.period);
      pts.emplace_back(t, count_last_bounded(s, t));
    }
    RationalPoly p = interpolate(pts);
    for (long j = n + 1; j <= n + 2; ++j) {
      const long t = static_cast<long>(r + j * qp.period);
      if (p(Rational(t)) != Rational(count_last_bounded(s, t)))
        throw std::logic_error("quasi-polynomial constituent fit fails at t=" + std::to_string(t));
    }
    qp.constituents.push_back(std::move(p));
  }
  return qp;
}

GorensteinResult gorenstein_check(const SSeq& s) {
  GorensteinResult res;
  if (s.size() == 0) {
    res.c = IntVec{};
    return res;
  }
  IntVec c{1};
  for (std::size_t j = 1; j < s.size(); ++j) {
    const std::int64_t num = c.back() * s[j] + std::gcd(s[j], s[j - 1]);
    if (num % s[j - 1] != 0) {
      res.failing_index = j + 1;
      return res;
    }
    c.push_back(num / s[j - 1]);
  }
  res.c = std::move(c);
  return res;
}

bool self_reciprocity_check(const SSeq& s) {
  const auto pts = pi_points(s).points;  // sorted
  const IntVec& base = pts.front();
  IntVec mirror(base.size());
  for (const auto& p : pts) {
    IntVec d(base.size());
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = base[i] + p[i];
    bool ok = true;
    for (const auto& q : pts) {
      for (std::size_t i = 0; i < d.size(); ++i) mirror[i] = d[i] - q[i];
      if (!std::binary_search(pts.begin(), pts.end(), mirror)) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

SSeq linear_recurrence_sequence(std::int64_t l, std::int64_t m, std::size_t n) {
  std::vector<std::int64_t> v;
  for (std::size_t j = 0; j < n; ++j) {
    if (j == 0)
      v.push_back(1);
    else if (j == 1)
      v.push_back(l);
    else
      v.push_back(l * v[j - 1] + m * v[j - 2]);
    if (v.back() <= 0) throw std::domain_error("recurrence term s_" + std::to_string(j + 1) + " is not positive");
  }
  return make_explicit(v);
}

}  // namespace lhp
