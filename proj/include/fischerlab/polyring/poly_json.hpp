#pragma once

#include <json.hpp>

#include "fischerlab/polyring/poly.hpp"
#include "fischerlab/polyring/scalar.hpp"

namespace fischerlab {

/// Q: {"num": "...", "den": "..."}; Qi: {"re": {...}, "im": {...}}.
/// Integers are decimal strings of unbounded length.
nlohmann::json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const nlohmann::json& j, Field field);

/// {"arity": d, "field": "Q"|"Qi", "terms": [{"exps": [...], "coeff": ...}]},
/// terms in ascending graded lex order.
nlohmann::json poly_to_json(const Poly& p);
/// Throws InvalidArgument on malformed input.
Poly poly_from_json(const nlohmann::json& j);

}  // namespace fischerlab
