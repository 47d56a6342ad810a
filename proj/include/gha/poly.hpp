#pragma once

// Univariate polynomials in h over a FieldDesc, dense ascending storage.

#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gha/field.hpp"

namespace gha {

inline constexpr std::size_t kDefaultDegreeCap = 100000;

/// Largest degree any product or composition is allowed to reach.
struct DegreeCap {
  std::size_t value = kDefaultDegreeCap;
};

/// Degree of the zero polynomial.
inline constexpr long kMinusInfinity = std::numeric_limits<long>::min();

class Poly {
 public:
  /// Zero polynomial over Q.
  Poly() = default;
  /// Zero polynomial over `field`.
  explicit Poly(const FieldDesc& field) : field_(field) {}
  /// Ascending coefficients; trailing zeros are stripped.
  Poly(const FieldDesc& field, std::vector<FieldElement> coeffs);

  static Poly constant(const FieldElement& c);
  static Poly constant(const FieldDesc& field, const Rational& c);
  static Poly monomial(const FieldElement& c, std::size_t power);
  /// The polynomial h.
  static Poly identity(const FieldDesc& field);
  static Poly from_rationals(const FieldDesc& field, const std::vector<Rational>& ascending);

  const FieldDesc& field() const noexcept { return field_; }
  std::span<const FieldElement> coefficients() const noexcept { return coeffs_; }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  /// kMinusInfinity for the zero polynomial.
  long degree() const noexcept {
    return coeffs_.empty() ? kMinusInfinity : static_cast<long>(coeffs_.size()) - 1;
  }

  /// Coefficient of h^power (zero past the degree).
  FieldElement coefficient(std::size_t power) const;
  /// Throws DomainError on the zero polynomial.
  const FieldElement& leading_coefficient() const;

  FieldElement operator()(const FieldElement& at) const;

  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const FieldElement& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const FieldElement& c) { return a *= c; }
  friend Poly operator*(const FieldElement& c, Poly a) { return a *= c; }
  /// Product under the default degree cap.
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator-() const;

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void strip();

  FieldDesc field_;
  std::vector<FieldElement> coeffs_;
};

Poly multiply(const Poly& a, const Poly& b, DegreeCap cap = {});
Poly derivative(const Poly& p);

/// (quotient, remainder) with deg remainder < deg divisor.
std::pair<Poly, Poly> divmod(const Poly& p, const Poly& divisor);

/// g(f(h)), evaluated by Horner's rule in the polynomial ring.
Poly compose(const Poly& g, const Poly& f, DegreeCap cap = {});

/// sigma^k(h) = f o f o ... o f (k times); sigma^0(h) = h.
Poly sigma_power_h(const Poly& f, unsigned k, DegreeCap cap = {});

/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& p, const Poly& q);
Poly monic(const Poly& p);
bool divides(const Poly& d, const Poly& p);

/// Finds p with p(F(h)) = g(h), if any. Requires deg F >= 1.
std::optional<Poly> decompose_as_polynomial_in(const Poly& g, const Poly& F);

/// Phi_m as a polynomial over Q.
Poly cyclotomic_polynomial(unsigned m);

/// Coefficient-wise embedding into a larger field.
Poly embed(const Poly& p, const FieldDesc& target);

/// Rational roots of a polynomial whose coefficients lie in Q, ascending.
/// Throws DomainError when a coefficient is irrational or the coefficient
/// sizes make divisor enumeration unreasonable.
std::vector<Rational> rational_roots(const Poly& p);

/// F(h) = f(h + alpha) - alpha. F(0) = 0 whenever alpha is a root of f(h) - h.
Poly shift_to_origin(const Poly& f, const FieldElement& alpha);

/// Descending text form in the given variable: "h^3 + 2*h - 1".
std::string to_string(const Poly& p, const std::string& var = "h");

}  // namespace gha
