#include "lhp/sequences.hpp"

#include <charconv>
#include <stdexcept>

namespace lhp {

std::int64_t SSeq::product() const {
  std::int64_t p = 1;
  for (auto v : values) p *= v;
  return p;
}

SSeq SSeq::reversed() const { return make_explicit({values.rbegin(), values.rend()}); }

SSeq SSeq::prefix(std::size_t n) const {
  SSeq s = *this;
  s.values.resize(std::min(n, values.size()));
  return s;
}

std::string SSeq::to_string() const {
  std::string s;
  for (auto v : values) {
    if (!s.empty()) s += ',';
    s += std::to_string(v);
  }
  return s;
}

SSeq make_explicit(std::vector<std::int64_t> values) {
  for (std::size_t i = 0; i < values.size(); ++i)
    if (values[i] <= 0) throw std::domain_error("sequence term s_" + std::to_string(i + 1) + " is not positive");
  return {std::move(values), Family::explicit_list, {}};
}

std::vector<std::int64_t> kl_terms_with_zero(std::int64_t k, std::int64_t l, std::size_t n) {
  std::vector<std::int64_t> a(n + 1);
  a[0] = 0;
  if (n >= 1) a[1] = 1;
  for (std::size_t i = 2; i <= n; ++i) a[i] = (i % 2 == 0 ? l : k) * a[i - 1] - a[i - 2];
  return a;
}

SSeq make_kl(std::int64_t k, std::int64_t l, std::size_t n) {
  if (k <= 0 || l <= 0) throw std::domain_error("(k,l) must be positive");
  auto a = kl_terms_with_zero(k, l, n);
  for (std::size_t i = 1; i <= n; ++i)
    if (a[i] <= 0)
      throw std::domain_error("(" + std::to_string(k) + "," + std::to_string(l) + ")-sequence term a_" +
                              std::to_string(i) + " = " + std::to_string(a[i]) + " is not positive");
  return {{a.begin() + 1, a.end()}, Family::kl, {k, l}};
}

SSeq make_family(Family family, const std::vector<std::int64_t>& params, std::size_t n) {
  auto need = [&](std::size_t count) {
    if (params.size() != count) throw std::invalid_argument("wrong number of sequence parameters");
    for (auto p : params)
      if (p <= 0) throw std::domain_error("sequence parameters must be positive");
  };
  switch (family) {
    case Family::explicit_list:
      throw std::invalid_argument("explicit sequences take their values directly");
    case Family::kl:
      need(2);
      return make_kl(params[0], params[1], n);
    case Family::ell: {
      need(1);
      SSeq s = make_kl(params[0], params[0], n);
      s.family = Family::ell;
      s.params = params;
      return s;
    }
    case Family::one_mod_k: {
      need(1);
      SSeq s{{}, family, params};
      for (std::size_t i = 0; i < n; ++i) s.values.push_back(static_cast<std::int64_t>(i) * params[0] + 1);
      return s;
    }
    case Family::arithmetic: {
      need(1);
      SSeq s{{}, family, params};
      for (std::size_t i = 1; i <= n; ++i) s.values.push_back(static_cast<std::int64_t>(i) * params[0]);
      return s;
    }
  }
  throw std::invalid_argument("unknown sequence family");
}

RhoR rho_r(std::int64_t k, std::int64_t l, std::size_t n) {
  make_kl(k, l, n);
  make_kl(l, k, n);
  auto a = kl_terms_with_zero(k, l, n);
  auto b = kl_terms_with_zero(l, k, n);
  RhoR out;
  for (std::size_t i = 1; i <= n; ++i) {
    out.rho.push_back(a[i] + b[i - 1]);
    out.r.push_back(b[i] + a[i - 1]);
  }
  return out;
}

bool gt_c_ell(std::int64_t x, std::int64_t y, std::int64_t l) {
  if (l < 2) throw std::invalid_argument("gt_c_ell needs l >= 2");
  if (y == 0) return x > 0;
  const __int128 X = x, Y = y, L = l;
  return 2 * X > L * Y && X * X + Y * Y > L * X * Y;
}

namespace {

std::int64_t to_int(std::string_view text) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  return v;
}

std::vector<std::int64_t> to_list(std::string_view text) {
  std::vector<std::int64_t> out;
  while (!text.empty()) {
    auto comma = text.find(',');
    out.push_back(to_int(text.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    text = text.substr(comma + 1);
  }
  return out;
}

}  // namespace

SSeq parse_sequence_spec(std::string_view spec) {
  auto colon = spec.find(':');
  if (colon == std::string_view::npos) return make_explicit(to_list(spec));
  std::string_view head = spec.substr(0, colon);
  std::string_view rest = spec.substr(colon + 1);
  auto colon2 = rest.find(':');
  if (colon2 == std::string_view::npos || rest.substr(colon2 + 1, 2) != "n=")
    throw std::invalid_argument("sequence spec '" + std::string(spec) + "' needs a ':n=<len>' suffix");
  auto params = to_list(rest.substr(0, colon2));
  auto n = to_int(rest.substr(colon2 + 3));
  if (n < 0) throw std::invalid_argument("negative sequence length");
  Family f;
  if (head == "kl")
    f = Family::kl;
  else if (head == "ell")
    f = Family::ell;
  else if (head == "1modk")
    f = Family::one_mod_k;
  else if (head == "arith")
    f = Family::arithmetic;
  else
    throw std::invalid_argument("unknown sequence family '" + std::string(head) + "'");
  return make_family(f, params, static_cast<std::size_t>(n));
}

}  // namespace lhp
