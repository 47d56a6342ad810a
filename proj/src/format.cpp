#include "gha/format.hpp"

#include <sstream>

#include "gha/errors.hpp"

namespace gha {

std::string to_string(const AlgebraElement& a) {
  if (a.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [key, g] : a.terms()) {
    if (!first) out << " + ";
    first = false;
    const auto [i, k] = key;
    std::string term;
    if (i > 0) term += "x^" + std::to_string(i) + " * ";
    term += "(" + to_string(g) + ")";
    if (k > 0) term += " * y^" + std::to_string(k);
    out << term;
  }
  return out.str();
}

nlohmann::json to_json(const FieldElement& c) {
  if (c.field().is_rationals()) return c.coords()[0].get_str();
  nlohmann::json coords = nlohmann::json::array();
  for (const auto& q : c.coords()) coords.push_back(q.get_str());
  return coords;
}

nlohmann::json to_json(const Poly& p) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& c : p.coefficients()) out.push_back(to_json(c));
  return out;
}

nlohmann::json to_json(const AlgebraElement& a) {
  const Context& ctx = *a.context();
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [key, g] : a.terms()) {
    terms.push_back({{"i", key.first}, {"k", key.second}, {"poly", to_json(g)}});
  }
  return {{"f", to_json(ctx.f())}, {"field", ctx.field().name()}, {"terms", terms}};
}

namespace {

Rational rational_from_json(const nlohmann::json& j) {
  Rational q;
  if (j.is_string()) {
    if (q.set_str(j.get<std::string>(), 10) != 0 || q.get_den() == 0) {
      throw DomainError("malformed rational '" + j.get<std::string>() + "'");
    }
  } else if (j.is_number_integer()) {
    q = Rational(j.get<long>());
  } else {
    throw DomainError("expected a rational string, got " + j.dump());
  }
  q.canonicalize();
  return q;
}

}  // namespace

FieldElement field_element_from_json(const nlohmann::json& j, const FieldDesc& field) {
  if (!j.is_array()) return FieldElement(field, rational_from_json(j));
  std::vector<Rational> coords;
  for (const auto& c : j) coords.push_back(rational_from_json(c));
  if (coords.size() != field.dimension()) {
    throw DomainError("expected " + std::to_string(field.dimension()) + " coordinates for " + field.name());
  }
  return FieldElement::from_coords(field, std::move(coords));
}

Poly poly_from_json(const nlohmann::json& j, const FieldDesc& field) {
  if (!j.is_array()) throw DomainError("polynomial must be a coefficient array");
  std::vector<FieldElement> coeffs;
  for (const auto& c : j) coeffs.push_back(field_element_from_json(c, field));
  Poly p(field, std::move(coeffs));
  if (p.coefficients().size() != j.size()) throw DomainError("polynomial array has trailing zeros");
  return p;
}

AlgebraElement element_from_json(const nlohmann::json& j, const ContextPtr& ctx) {
  if (j.contains("field") && j.at("field").get<std::string>() != ctx->field().name()) {
    throw DomainError("element field " + j.at("field").get<std::string>() + " differs from " +
                      ctx->field().name());
  }
  if (j.contains("f") && !(poly_from_json(j.at("f"), ctx->field()) == ctx->f())) {
    throw DomainError("element was computed for a different f");
  }
  Terms terms;
  for (const auto& t : j.at("terms")) {
    const TermKey key{t.at("i").get<unsigned>(), t.at("k").get<unsigned>()};
    if (!terms.emplace(key, poly_from_json(t.at("poly"), ctx->field())).second) {
      throw DomainError("duplicate term in element document");
    }
  }
  return AlgebraElement(ctx, std::move(terms));
}

}  // namespace gha
