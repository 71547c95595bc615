#include "lhp/json_io.hpp"

namespace lhp {

using nlohmann::json;

json monomial_to_json(const Monomial& m) {
  json j = json::object();
  for (const auto& [v, e] : m.exponents()) j[var_name(v)] = e;
  return j;
}

Monomial monomial_from_json(const json& j) {
  Monomial m;
  for (const auto& [name, e] : j.items()) m = m * Monomial::of(var_id(name), e.get<int>());
  return m;
}

json poly_to_json(const SparsePoly& p, const Caps& caps) {
  json vars = json::array();
  for (int v : p.variables()) vars.push_back(var_name(v));
  json jcaps = json::object();
  for (const auto& [v, c] : caps) jcaps[var_name(v)] = c;
  json terms = json::array();
  for (const auto& [m, c] : p.terms()) terms.push_back({{"exp", monomial_to_json(m)}, {"coeff", c.get_str()}});
  return {{"vars", vars}, {"caps", jcaps}, {"terms", terms}};
}

json series_to_json(const TruncSeries& s) { return poly_to_json(s.poly(), s.caps()); }

SparsePoly poly_from_json(const json& j) {
  SparsePoly p;
  for (const auto& t : j.at("terms")) p.add_term(monomial_from_json(t.at("exp")), Int(t.at("coeff").get<std::string>()));
  return p;
}

Caps caps_from_json(const json& j) {
  Caps caps;
  if (j.contains("caps"))
    for (const auto& [name, c] : j.at("caps").items()) caps[var_id(name)] = c.get<int>();
  return caps;
}

}  // namespace lhp
