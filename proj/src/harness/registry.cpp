#include <algorithm>
#include <chrono>
#include <mutex>
#include <stdexcept>

#include "lhp/budget.hpp"
#include "lhp/enumeration.hpp"
#include "theorems.hpp"

namespace lhp::harness {

namespace detail {

std::int64_t get_int(const Params& p, const char* key) {
  if (!p.contains(key)) throw std::invalid_argument(std::string("missing parameter '") + key + "'");
  const auto& v = p.at(key);
  if (v.is_number_integer()) return v.get<std::int64_t>();
  if (v.is_string()) return std::stoll(v.get<std::string>());
  throw std::invalid_argument(std::string("parameter '") + key + "' is not an integer");
}

std::int64_t get_int(const Params& p, const char* key, std::int64_t fallback) {
  return p.contains(key) ? get_int(p, key) : fallback;
}

std::string get_str(const Params& p, const char* key, const std::string& fallback) {
  if (!p.contains(key)) return fallback;
  const auto& v = p.at(key);
  return v.is_string() ? v.get<std::string>() : v.dump();
}

SSeq get_seq(const Params& p, const char* key) {
  if (!p.contains(key)) throw std::invalid_argument(std::string("missing parameter '") + key + "'");
  return parse_sequence_spec(get_str(p, key, ""));
}

int cap_of(const Caps& caps, int var) {
  auto it = caps.find(var);
  if (it == caps.end()) throw std::invalid_argument("no cap given for " + var_name(var));
  return it->second;
}

SSeq one_to_n(std::int64_t n) {
  std::vector<std::int64_t> v;
  for (std::int64_t i = 1; i <= n; ++i) v.push_back(i);
  return make_explicit(v);
}

SSeq n_to_one(std::int64_t n) { return one_to_n(n).reversed(); }

SparsePoly geometric_sum(int k, const Monomial& m) {
  SparsePoly p;
  for (int j = 0; j < k; ++j) p.add_term(m.pow(j), 1);
  return p;
}

SparsePoly counts_poly(const std::vector<Int>& counts, int var) { return SparsePoly::from_dense(var, counts); }

TruncSeries product_inverse(const std::vector<Monomial>& ms, const Caps& caps) {
  return divide_by_factors(SparsePoly(1), ms, caps);
}

TruncSeries divide_by_factors(const SparsePoly& numerator, const std::vector<Monomial>& ms, const Caps& caps) {
  TruncSeries r(numerator, caps);
  for (const auto& m : ms)
    if (below_caps(m, caps)) r = r.div_one_minus(m);
  return r;
}

TruncSeries times_pochhammer(const TruncSeries& r, const Monomial& a, const Monomial& step, std::optional<int> n,
                             int sign, bool divide) {
  if (!n && step.is_unit()) throw std::domain_error("infinite product with a unit step");
  TruncSeries out = r;
  Monomial m = a;
  for (int i = 0; !n || i < *n; ++i, m = m * step) {
    if (!below_caps(m, r.caps())) break;  // later factors only grow
    out = divide ? out.div_one_minus(m, sign) : out.mul_one_minus(m, sign);
  }
  return out;
}

std::string seq_param(const SSeq& s) { return s.to_string(); }

std::vector<SSeq> random_sequences(std::uint64_t seed, int count, int min_n, int max_n, int max_s) {
  std::mt19937_64 rng(seed);
  std::vector<SSeq> out;
  for (int c = 0; c < count; ++c) {
    const int n = min_n + static_cast<int>(rng() % static_cast<std::uint64_t>(max_n - min_n + 1));
    std::vector<std::int64_t> v;
    for (int i = 0; i < n; ++i) v.push_back(1 + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(max_s)));
    out.push_back(make_explicit(v));
  }
  return out;
}

}  // namespace detail

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries = [] {
    std::vector<Entry> v;
    detail::add_partition_theorems(v);
    detail::add_permutation_theorems(v);
    detail::add_geometry_theorems(v);
    std::sort(v.begin(), v.end(), [](const Entry& a, const Entry& b) { return a.id < b.id; });
    for (std::size_t i = 1; i < v.size(); ++i)
      if (v[i].id == v[i - 1].id) throw std::logic_error("duplicate registry id " + v[i].id);
    return v;
  }();
  return entries;
}

const Entry* find_entry(const std::string& id) {
  const auto& r = registry();
  auto it = std::lower_bound(r.begin(), r.end(), id, [](const Entry& e, const std::string& k) { return e.id < k; });
  return it != r.end() && it->id == id ? &*it : nullptr;
}

VerificationReport verify(const TheoremCase& c) {
  const Entry* e = find_entry(c.id);
  if (!e) throw std::invalid_argument("unknown theorem id '" + c.id + "'");
  Caps caps = e->default_caps;
  for (const auto& [v, cap] : c.caps) caps[v] = cap;

  VerificationReport rep;
  rep.id = c.id;
  rep.params = c.params.is_null() ? Params::object() : c.params;
  if (!caps.empty()) rep.params["caps"] = caps_to_string(caps);
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = e->run(c.params.is_null() ? Params::object() : c.params, caps);
  } catch (const BudgetExceeded& ex) {
    out = Outcome{};
    out.status = Status::SKIPPED;
    out.lhs = e->lhs_route;
    out.rhs = e->rhs_route;
    out.notes = std::string("budget exceeded: ") + ex.what();
  }
  rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  rep.status = out.status;
  rep.lhs = out.lhs.empty() ? e->lhs_route : out.lhs;
  rep.rhs = out.rhs.empty() ? e->rhs_route : out.rhs;
  rep.first_mismatch = out.mismatch;
  rep.notes = out.notes;
  if (e->finite_evidence) rep.notes = "finite-evidence check at the stated scale" + (rep.notes.empty() ? "" : "; " + rep.notes);
  if (rep.status == Status::FAIL && !rep.first_mismatch) rep.first_mismatch = Mismatch{{{"index", 0}}, "?", "?"};
  return rep;
}

}  // namespace lhp::harness
