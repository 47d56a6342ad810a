#pragma once

// Derivations and automorphisms of H(f).

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "gha/algebra.hpp"

namespace gha {

/// A candidate derivation, given by the images of the generators. It is
/// extended to x^i h^j y^k by the Leibniz rule over that factorization.
struct DerivationSpec {
  ContextPtr ctx;
  AlgebraElement im_x;
  AlgebraElement im_y;
  AlgebraElement im_h;

  /// The zero map.
  static DerivationSpec zero(const ContextPtr& ctx);
  /// lambda * d, where d(x^i h^j y^k) = (i - k) x^i h^j y^k.
  static DerivationSpec diagonal(const ContextPtr& ctx, const FieldElement& lambda);
};

/// Leibniz extension to any element. Meaningful only when check_derivation
/// holds; otherwise the result depends on the chosen factorization.
AlgebraElement apply_derivation(const DerivationSpec& d, const AlgebraElement& a);

/// True iff the Leibniz extension preserves the three defining relations,
/// i.e. the images define a derivation of H(f).
bool check_derivation(const DerivationSpec& d);

/// Components of degree r: each generator image is split by standard
/// degree, shifted by the degree of the generator.
std::map<long, DerivationSpec> derivation_homogeneous_parts(const DerivationSpec& d);

/// lambda when d = lambda * diagonal, empty otherwise. For deg f > 1 every
/// locally finite derivation has this form, so an empty result certifies
/// that a valid derivation is not locally finite.
/// Throws DomainError if deg f <= 1 or d is not a derivation.
std::optional<FieldElement> classify_locally_finite(const DerivationSpec& d);

struct NilpotentAt {
  unsigned k;
};
struct NotNilpotentWithin {
  unsigned max_iter;
};
using NilpotencyProbe = std::variant<NilpotentAt, NotNilpotentWithin>;

/// First k <= max_iter with d^k(a) = 0.
NilpotencyProbe derivation_power_bounded(const DerivationSpec& d, const AlgebraElement& a,
                                         unsigned max_iter);

/// The x-fixing automorphism x -> x, y -> a y, h -> a h + b.
struct XFixingPair {
  FieldElement a;
  FieldElement b;
};

/// Aut(H(f)) = {phi_lambda} x C_k for deg f > 1.
struct AutGroup {
  long n;
  /// k, the order of the x-fixing subgroup; divides n - 1.
  unsigned cyclic_order;
  /// Field holding the generator pair.
  FieldDesc field;
  /// Generator of the cyclic part; (1, 0) when it is trivial.
  XFixingPair generator;
  /// Divisors d of n - 1 for which a primitive d-th root of unity works.
  std::vector<unsigned> working_divisors;

  /// "C*" or "C* x Z_k".
  std::string description() const;
};

/// f(a h + b) == a f(h) + b, computed over the compositum of the fields.
bool satisfies_automorphism_condition(const Poly& f, const XFixingPair& pair);

/// Searches the divisors of n - 1. For each d a primitive d-th root a is
/// adjoined, b = (a - 1) a_{n-1} / (n a_n), and f(ah + b) = a f(h) + b is
/// tested exactly. The canonical root zeta_d is tried first; the other
/// primitive d-th roots are only tried when f has irrational coefficients.
AutGroup automorphism_group(const Context& ctx);

/// Applies x -> x, y -> a y, h -> a h + b termwise. The result lives over
/// the compositum of the element's field and the pair's field.
AlgebraElement apply_x_fixing_automorphism(const XFixingPair& pair, const AlgebraElement& e);

}  // namespace gha
