#pragma once

// Exact scalars: the rationals and cyclotomic fields Q(zeta_m).
//
// An element of Q(zeta_m) is stored by its phi(m) rational coordinates with
// respect to 1, zeta, ..., zeta^(phi(m)-1), always reduced modulo the m-th
// cyclotomic polynomial, so equality is coordinate-wise.

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace gha {

using Rational = mpq_class;
using Integer = mpz_class;

/// Q (conductor 1) or Q(zeta_m). Cyclotomic(1) is the same object as Q.
class FieldDesc {
 public:
  constexpr FieldDesc() noexcept = default;

  static constexpr FieldDesc rationals() noexcept { return FieldDesc(); }
  static FieldDesc cyclotomic(unsigned m);

  unsigned conductor() const noexcept { return m_; }
  bool is_rationals() const noexcept { return m_ == 1; }

  /// Dimension over Q, i.e. Euler's phi(m).
  std::size_t dimension() const;

  /// True when this field is a subfield of `target` under zeta_m -> zeta_M^(M/m).
  bool embeds_in(const FieldDesc& target) const noexcept;

  /// "Q" or "Q(zeta_m)".
  std::string name() const;

  friend bool operator==(const FieldDesc&, const FieldDesc&) = default;

 private:
  explicit FieldDesc(unsigned m) noexcept : m_(m) {}
  unsigned m_ = 1;
};

/// The smallest cyclotomic field containing both arguments.
FieldDesc compositum(const FieldDesc& a, const FieldDesc& b);

/// Parses "Q" or "Q(zeta_m)". Throws DomainError on anything else.
FieldDesc parse_field(const std::string& text);

unsigned euler_phi(unsigned m);

/// Ascending integer coefficients of the m-th cyclotomic polynomial.
/// Computed by exact division of t^m - 1 by the Phi_d for proper divisors d.
/// Results are memoized; safe to call concurrently.
const std::vector<Rational>& cyclotomic_coefficients(unsigned m);

class FieldElement {
 public:
  /// Zero of Q.
  FieldElement();
  /// Zero of `field`.
  explicit FieldElement(const FieldDesc& field);
  FieldElement(const FieldDesc& field, Rational value);
  FieldElement(const FieldDesc& field, long value) : FieldElement(field, Rational(value)) {}

  /// Element with the given coordinates in powers of zeta. Any length is
  /// accepted; the result is reduced modulo Phi_m.
  static FieldElement from_coords(const FieldDesc& field, std::vector<Rational> coords);

  /// The canonical primitive root zeta_m (the class of t mod Phi_m).
  static FieldElement zeta(const FieldDesc& field);

  const FieldDesc& field() const noexcept { return field_; }
  std::span<const Rational> coords() const noexcept { return coords_; }

  bool is_zero() const;
  bool is_one() const;
  /// True when the element lies in Q.
  bool is_rational() const;
  /// The rational value. Throws DomainError unless is_rational().
  const Rational& rational() const;

  FieldElement inverse() const;
  FieldElement pow(unsigned long e) const;

  FieldElement& operator+=(const FieldElement& rhs);
  FieldElement& operator-=(const FieldElement& rhs);
  FieldElement& operator*=(const FieldElement& rhs);
  FieldElement& operator/=(const FieldElement& rhs);
  FieldElement& operator*=(const Rational& rhs);

  /// *this += a * b, without a temporary in the rational case.
  void add_product(const FieldElement& a, const FieldElement& b);

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
  friend FieldElement operator*(FieldElement a, const Rational& b) { return a *= b; }
  friend FieldElement operator*(const Rational& b, FieldElement a) { return a *= b; }
  FieldElement operator-() const;

  friend bool operator==(const FieldElement& a, const FieldElement& b);

 private:
  void check_same_field(const FieldElement& rhs) const;
  void reduce();

  FieldDesc field_;
  std::vector<Rational> coords_;
};

/// The same element viewed in a larger field. Throws DomainError when
/// source does not embed in target.
FieldElement embed(const FieldElement& x, const FieldDesc& target);

/// Text form: a rational ("-5/3") or a polynomial in zeta with descending
/// powers ("zeta^2 - 1/2*zeta + 3").
std::string to_string(const FieldElement& x);
std::string to_string(const Rational& q);

}  // namespace gha
