#pragma once

// JSON encodings of monomials and polynomials. Coefficients are decimal
// strings so that arbitrary precision survives the round trip.

#include <json.hpp>

#include "lhp/algebra.hpp"

namespace lhp {

nlohmann::json monomial_to_json(const Monomial& m);
Monomial monomial_from_json(const nlohmann::json& j);

/// {"vars":[...], "caps":{...}, "terms":[{"exp":{"q":3},"coeff":"7"}]}
nlohmann::json poly_to_json(const SparsePoly& p, const Caps& caps = {});
nlohmann::json series_to_json(const TruncSeries& s);
SparsePoly poly_from_json(const nlohmann::json& j);
Caps caps_from_json(const nlohmann::json& j);

}  // namespace lhp
