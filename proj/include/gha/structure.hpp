#pragma once

// Decision procedures on H(f): domain / Noetherian / down-up flags, the
// strict chain of left ideals I_n = sum_{i<=n} H h y^i, membership in the
// center C[z] and in C[z, h], and generator-induced Z-gradings.

#include <optional>
#include <vector>

#include "gha/algebra.hpp"

namespace gha {

enum class CenterDescription { PolynomialInZ, NotComputedDegOne };

struct Classification {
  long deg_f;
  bool is_domain;
  bool is_noetherian;
  bool is_generalized_down_up;
  CenterDescription center_description;
};

/// Pure degree test on f.
Classification classify(const Context& ctx);

struct WitnessReport {
  unsigned n;
  /// Monic gcd of sigma^j(h), 1 <= j <= n + 1.
  Poly generator_gcd;
  /// h lies in the ideal of C[h] generated by those sigma^j(h), i.e.
  /// h y^{n+1} would lie in I_n.
  bool is_member;
};

/// Reports for n = 0..max_n. Requires f(0) = 0; otherwise throws DomainError
/// naming a rational shift when one exists (see shift_to_origin).
std::vector<WitnessReport> noetherian_witness(const Context& ctx, unsigned max_n);

/// A root alpha in Q of f(h) - h, if any. Shifting by it gives F(0) = 0.
std::optional<FieldElement> find_rational_shift(const Poly& f);

/// p with a = p(z), or nullopt when a is not in C[z]. Requires deg f != 1.
std::optional<Poly> center_membership(const AlgebraElement& a);

/// Coefficients p_k with a = sum_k p_k(h) z^k, or nullopt when a is not in
/// C[z, h]. Requires deg f > 1 and a in H_0.
std::optional<std::vector<Poly>> zh_membership(const AlgebraElement& a);

/// Rebuilds sum_k p_k(h) z^k.
AlgebraElement from_zh(const ContextPtr& ctx, const std::vector<Poly>& coefficients);
/// Rebuilds p(z).
AlgebraElement from_z(const ContextPtr& ctx, const Poly& p);

/// Degrees (d_x, d_y, d_h) assigned to the generators.
struct GradingTriple {
  long dx = 0;
  long dy = 0;
  long dh = 0;
  friend bool operator==(const GradingTriple&, const GradingTriple&) = default;
};

/// The lattice of admissible generator degrees, as Z-span of `generators`.
struct GradingFamily {
  std::vector<GradingTriple> generators;
  bool contains(const GradingTriple& t) const;
};

/// True when every defining relation is homogeneous under `t`.
bool homogenizes_relations(const Context& ctx, const GradingTriple& t);

/// Solves the homogeneity constraints of the three relations over Z.
/// Requires deg f > 1.
GradingFamily admissible_generator_gradings(const Context& ctx);

}  // namespace gha
