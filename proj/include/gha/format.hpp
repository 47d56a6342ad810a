#pragma once

// Canonical text and JSON forms.
//
// Text: terms in ascending (i, k) order joined by " + ", each written
// "x^i * (g) * y^k" with x^0 and y^0 elided, g in descending powers of h.
// The output always uses the x/h/y basis and parses back to itself.
//
// JSON: {"f": [...], "field": "Q", "terms": [{"i": 1, "k": 0, "poly": [...]}]}
// with polynomials as ascending coefficient arrays. A rational coefficient is
// a string "p/q"; a cyclotomic one is the array of its phi(m) coordinates.

#include <string>

#include <json.hpp>

#include "gha/algebra.hpp"

namespace gha {

std::string to_string(const AlgebraElement& a);

nlohmann::json to_json(const FieldElement& c);
nlohmann::json to_json(const Poly& p);
nlohmann::json to_json(const AlgebraElement& a);

FieldElement field_element_from_json(const nlohmann::json& j, const FieldDesc& field);
Poly poly_from_json(const nlohmann::json& j, const FieldDesc& field);
/// Reads the "terms" of an element document into `ctx`. The "f" and "field"
/// entries, when present, must match the context.
AlgebraElement element_from_json(const nlohmann::json& j, const ContextPtr& ctx);

}  // namespace gha
