#pragma once

// JSON forms of presentations and elements:
//   {"coefficients":"F2"|"Z","truncation":int|null,
//    "generators":[{"name":str,"degree":int,"power_bound":int|null,
//                   "replacement":[[coeff,{gen:exp,...}],...]}]}
// Elements are [[coeff,{gen:exp,...}],...] in canonical monomial order.

#include "chowlab/algebra.hpp"
#include "chowlab/poincare.hpp"

#include <nlohmann/json.hpp>

namespace chowlab {

nlohmann::json integer_to_json(const Integer& x);
Integer integer_from_json(const nlohmann::json& j);

nlohmann::json to_json(const AlgebraPresentation& a);
AlgebraPresentation presentation_from_json(const nlohmann::json& j);

nlohmann::json to_json(const AlgebraPresentation& a, const Element& x);
Element element_from_json(const AlgebraPresentation& a, const nlohmann::json& j);

nlohmann::json to_json(const PoincarePolynomial& p);
nlohmann::json to_json(const Polynomial& p);

}  // namespace chowlab
