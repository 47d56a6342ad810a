#pragma once

// Surface syntax for elements of H(f).
//
//   expr    := term (('+' | '-') term)*
//   term    := unary ('*'? unary)*        juxtaposition multiplies: "2h"
//   unary   := '-' unary | power
//   power   := primary ('^' integer)?
//   primary := number ('/' number)? | x | y | h | z | zeta | '(' expr ')'
//
// Multiplication keeps operand order; nothing is assumed to commute.

#include <string>
#include <string_view>
#include <vector>

#include "gha/algebra.hpp"

namespace gha {

struct Expr {
  enum class Kind { Number, Atom, Neg, Add, Sub, Mul, Pow };

  Kind kind = Kind::Number;
  /// Byte offset of the first character of this node.
  std::size_t offset = 0;
  /// Number literal.
  Rational value;
  /// Atom name: x, y, h, z or zeta.
  std::string name;
  /// Pow exponent.
  unsigned long exponent = 0;
  std::vector<Expr> children;
};

/// Throws SyntaxError with byte offset and expected-token set.
Expr parse(std::string_view input);

/// Debug form, e.g. "Sub(Mul(y,x),Mul(x,y))".
std::string to_string(const Expr& e);

/// Folds the tree through the algebra operations; z expands to xy - h.
AlgebraElement evaluate(const Expr& e, const ContextPtr& ctx);

/// Evaluates a polynomial in h (atoms h, zeta and numbers only).
Poly evaluate_poly(const Expr& e, const FieldDesc& field, DegreeCap cap = {});

AlgebraElement parse_element(std::string_view input, const ContextPtr& ctx);
Poly parse_poly(std::string_view input, const FieldDesc& field, DegreeCap cap = {});

}  // namespace gha
