#pragma once

// The generalized Heisenberg algebra H(f): generators x, y, h with
//   hx = x f(h),   yh = f(h) y,   yx - xy = f(h) - h.
// Elements are kept in the normal form  sum_{i,k} x^i g_{i,k}(h) y^k.

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <utility>

#include "gha/poly.hpp"

namespace gha {

class Context;
using ContextPtr = std::shared_ptr<const Context>;

/// (i, k): exponents of x and y in x^i g(h) y^k.
using TermKey = std::pair<unsigned, unsigned>;
/// Normal-form terms; never stores a zero polynomial.
using Terms = std::map<TermKey, Poly>;

/// Fixes f and owns the memo tables for sigma^k(h) and the normal forms of
/// y^k x^j. Caches are filled idempotently under a mutex; results never
/// depend on whether a lookup hits.
class Context : public std::enable_shared_from_this<Context> {
  struct Private {};

 public:
  Context(Private, Poly f, std::size_t degree_cap);

  static ContextPtr make(Poly f, std::size_t degree_cap = kDefaultDegreeCap);

  Context(const Context&) = delete;
  Context& operator=(const Context&) = delete;

  const Poly& f() const noexcept { return f_; }
  const FieldDesc& field() const noexcept { return f_.field(); }
  /// deg f, kMinusInfinity when f = 0.
  long n() const noexcept { return f_.degree(); }
  DegreeCap cap() const noexcept { return cap_; }

  /// sigma^k(h), memoized.
  const Poly& sigma_h(unsigned k) const;
  /// sigma^k(g) = g(sigma^k(h)).
  Poly sigma(const Poly& g, unsigned k) const;
  /// Normal form of y^k x^j, memoized.
  const Terms& y_power_x_power(unsigned k, unsigned j) const;

  /// Same f over a larger field.
  ContextPtr with_field(const FieldDesc& target) const;

  bool same_algebra(const Context& other) const noexcept {
    return this == &other || (f_ == other.f_);
  }

 private:
  Poly f_;
  DegreeCap cap_;

  mutable std::mutex mutex_;
  mutable std::map<unsigned, Poly> sigma_cache_;
  mutable std::map<TermKey, Terms> yx_cache_;
};

/// Homogeneous degree under the standard grading (deg x = 1, deg y = -1,
/// deg h = 0). `value` is empty for non-homogeneous elements; the zero
/// element reports degree 0.
struct Degree {
  std::optional<long> value;
  bool is_mixed() const noexcept { return !value.has_value(); }
};

class AlgebraElement {
 public:
  explicit AlgebraElement(ContextPtr ctx);
  AlgebraElement(ContextPtr ctx, Terms terms);

  static AlgebraElement monomial(ContextPtr ctx, unsigned i, Poly g, unsigned k);
  static AlgebraElement scalar(ContextPtr ctx, const FieldElement& c);
  static AlgebraElement scalar(ContextPtr ctx, const Rational& c);
  static AlgebraElement polynomial(ContextPtr ctx, Poly g) {
    return monomial(std::move(ctx), 0, std::move(g), 0);
  }

  const ContextPtr& context() const noexcept { return ctx_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// g_{i,k}, zero when absent.
  Poly coefficient(unsigned i, unsigned k) const;

  AlgebraElement& operator+=(const AlgebraElement& rhs);
  AlgebraElement& operator-=(const AlgebraElement& rhs);
  AlgebraElement& operator*=(const FieldElement& c);

  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(AlgebraElement a, const FieldElement& c) { return a *= c; }
  friend AlgebraElement operator*(const FieldElement& c, AlgebraElement a) { return a *= c; }
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
  AlgebraElement operator-() const;

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b);

 private:
  void check_same_context(const AlgebraElement& rhs) const;

  ContextPtr ctx_;
  Terms terms_;
};

struct Generators {
  AlgebraElement x, y, h, z;
};

/// x, y, h and the Casimir element z = xy - h = yx - f(h).
Generators generators(const ContextPtr& ctx);

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement commutator(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement power(const AlgebraElement& a, unsigned e);

/// Splits by l = i - k. Summing the parts gives back the input.
std::map<long, AlgebraElement> homogeneous_parts(const AlgebraElement& a);
Degree degree(const AlgebraElement& a);
/// All terms have i = k.
bool in_h0(const AlgebraElement& a);

/// The extension of sigma to H_0, characterized by  theta x = x sigma(theta)
/// and  y theta = sigma(theta) y.  Throws DomainError outside H_0.
AlgebraElement sigma_h0(const AlgebraElement& theta);

/// The anti-automorphism x <-> y, h -> h.
AlgebraElement apply_iota(const AlgebraElement& a);

/// The torus automorphism x -> lambda x, y -> lambda^{-1} y, h -> h.
AlgebraElement apply_phi_lambda(const FieldElement& lambda, const AlgebraElement& a);

/// Re-expresses `a` over `target`, which must be the same f over a field
/// containing a's field.
AlgebraElement embed(const AlgebraElement& a, const ContextPtr& target);

}  // namespace gha
