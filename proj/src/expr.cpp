#include "gha/expr.hpp"

#include <cctype>
#include <limits>
#include <optional>

#include "gha/errors.hpp"

namespace gha {

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Caret, LParen, RParen, End };

struct Token {
  Tok type;
  std::size_t offset;
  std::string text;
};

const std::vector<std::string> kOperandStart = {"number", "x", "y", "h", "z", "zeta", "'('", "'-'"};
const std::vector<std::string> kAfterOperand = {"'+'", "'-'", "'*'", "'^'", "operand", "end of input"};

class Lexer {
 public:
  explicit Lexer(std::string_view input) : input_(input) {}

  Token next() {
    while (pos_ < input_.size() && std::isspace(static_cast<unsigned char>(input_[pos_]))) ++pos_;
    const std::size_t start = pos_;
    if (pos_ == input_.size()) return {Tok::End, start, ""};
    const char c = input_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t end = digits_end(pos_);
      // "p/q" is a single rational literal.
      if (end < input_.size() && input_[end] == '/') {
        const std::size_t den_end = digits_end(end + 1);
        if (den_end == end + 1) {
          throw SyntaxError("expected denominator after '/'", end + 1, {"digit"});
        }
        end = den_end;
      }
      pos_ = end;
      return {Tok::Number, start, std::string(input_.substr(start, end - start))};
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t end = pos_;
      while (end < input_.size() &&
             (std::isalnum(static_cast<unsigned char>(input_[end])) || input_[end] == '_')) {
        ++end;
      }
      std::string word(input_.substr(start, end - start));
      if (word != "x" && word != "y" && word != "h" && word != "z" && word != "zeta") {
        throw SyntaxError("unknown identifier '" + word + "'", start, {"x", "y", "h", "z", "zeta"});
      }
      pos_ = end;
      return {Tok::Ident, start, std::move(word)};
    }
    ++pos_;
    switch (c) {
      case '+': return {Tok::Plus, start, "+"};
      case '-': return {Tok::Minus, start, "-"};
      case '*': return {Tok::Star, start, "*"};
      case '^': return {Tok::Caret, start, "^"};
      case '(': return {Tok::LParen, start, "("};
      case ')': return {Tok::RParen, start, ")"};
      default:
        throw SyntaxError(std::string("unexpected character '") + c + "'", start, kOperandStart);
    }
  }

 private:
  std::size_t digits_end(std::size_t from) const {
    while (from < input_.size() && std::isdigit(static_cast<unsigned char>(input_[from]))) ++from;
    return from;
  }

  std::string_view input_;
  std::size_t pos_ = 0;
};

class Parser {
 public:
  explicit Parser(std::string_view input) : lexer_(input) { advance(); }

  Expr parse_all() {
    Expr e = parse_expr();
    if (current_.type != Tok::End) {
      fail("unexpected '" + current_.text + "'", current_.type == Tok::RParen
                                                     ? std::vector<std::string>{"'+'", "'-'", "'*'", "end of input"}
                                                     : kAfterOperand);
    }
    return e;
  }

 private:
  void advance() { current_ = lexer_.next(); }

  [[noreturn]] void fail(const std::string& what, std::vector<std::string> expected) const {
    throw SyntaxError(what + " at offset " + std::to_string(current_.offset), current_.offset,
                      std::move(expected));
  }

  static Expr binary(Expr::Kind kind, std::size_t offset, Expr lhs, Expr rhs) {
    Expr e;
    e.kind = kind;
    e.offset = offset;
    e.children.push_back(std::move(lhs));
    e.children.push_back(std::move(rhs));
    return e;
  }

  bool starts_operand() const {
    return current_.type == Tok::Number || current_.type == Tok::Ident || current_.type == Tok::LParen;
  }

  Expr parse_expr() {
    Expr lhs = parse_term();
    while (current_.type == Tok::Plus || current_.type == Tok::Minus) {
      const auto kind = current_.type == Tok::Plus ? Expr::Kind::Add : Expr::Kind::Sub;
      const std::size_t offset = lhs.offset;
      advance();
      lhs = binary(kind, offset, std::move(lhs), parse_term());
    }
    return lhs;
  }

  Expr parse_term() {
    Expr lhs = parse_unary();
    for (;;) {
      if (current_.type == Tok::Star) {
        advance();
      } else if (!starts_operand()) {
        break;
      }
      const std::size_t offset = lhs.offset;
      lhs = binary(Expr::Kind::Mul, offset, std::move(lhs), parse_unary());
    }
    return lhs;
  }

  Expr parse_unary() {
    if (current_.type == Tok::Minus) {
      Expr e;
      e.kind = Expr::Kind::Neg;
      e.offset = current_.offset;
      advance();
      e.children.push_back(parse_unary());
      return e;
    }
    return parse_power();
  }

  Expr parse_power() {
    Expr base = parse_primary();
    if (current_.type != Tok::Caret) return base;
    advance();
    if (current_.type != Tok::Number || current_.text.find('/') != std::string::npos) {
      fail("exponent must be a nonnegative integer literal", {"nonnegative integer"});
    }
    Integer value(current_.text);
    if (value > std::numeric_limits<unsigned>::max()) fail("exponent too large", {"smaller integer"});
    Expr e;
    e.kind = Expr::Kind::Pow;
    e.offset = base.offset;
    e.exponent = value.get_ui();
    e.children.push_back(std::move(base));
    advance();
    return e;
  }

  Expr parse_primary() {
    Expr e;
    e.offset = current_.offset;
    switch (current_.type) {
      case Tok::Number:
        e.kind = Expr::Kind::Number;
        e.value = Rational(current_.text);
        if (e.value.get_den() == 0) fail("zero denominator", {"nonzero denominator"});
        e.value.canonicalize();
        advance();
        return e;
      case Tok::Ident:
        e.kind = Expr::Kind::Atom;
        e.name = current_.text;
        advance();
        return e;
      case Tok::LParen: {
        advance();
        Expr inner = parse_expr();
        if (current_.type != Tok::RParen) fail("missing ')'", {"')'", "'+'", "'-'", "'*'"});
        advance();
        inner.offset = e.offset;
        return inner;
      }
      default:
        fail(current_.type == Tok::End ? "unexpected end of input" : "unexpected '" + current_.text + "'",
             kOperandStart);
    }
  }

  Lexer lexer_;
  Token current_{Tok::End, 0, ""};
};

// Generic fold shared by the algebra and polynomial evaluators.
template <class Value, class Ops>
Value fold(const Expr& e, const Ops& ops) {
  switch (e.kind) {
    case Expr::Kind::Number: return ops.number(e.value);
    case Expr::Kind::Atom: return ops.atom(e.name);
    case Expr::Kind::Neg: return ops.neg(fold<Value>(e.children[0], ops));
    case Expr::Kind::Add: return ops.add(fold<Value>(e.children[0], ops), fold<Value>(e.children[1], ops));
    case Expr::Kind::Sub: return ops.sub(fold<Value>(e.children[0], ops), fold<Value>(e.children[1], ops));
    case Expr::Kind::Mul: return ops.mul(fold<Value>(e.children[0], ops), fold<Value>(e.children[1], ops));
    case Expr::Kind::Pow: return ops.pow(fold<Value>(e.children[0], ops), e.exponent);
  }
  throw std::logic_error("unhandled expression kind");
}

FieldElement zeta_in(const FieldDesc& field) {
  if (field.is_rationals()) throw DomainError("'zeta' requires a cyclotomic field (--field Q(zeta_m))");
  return FieldElement::zeta(field);
}

struct AlgebraOps {
  ContextPtr ctx;
  Generators gens;

  AlgebraElement number(const Rational& q) const { return AlgebraElement::scalar(ctx, q); }
  AlgebraElement atom(const std::string& name) const {
    if (name == "x") return gens.x;
    if (name == "y") return gens.y;
    if (name == "h") return gens.h;
    if (name == "z") return gens.z;
    return AlgebraElement::scalar(ctx, zeta_in(ctx->field()));
  }
  AlgebraElement neg(const AlgebraElement& a) const { return -a; }
  AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b) const { return a + b; }
  AlgebraElement sub(const AlgebraElement& a, const AlgebraElement& b) const { return a - b; }
  AlgebraElement mul(const AlgebraElement& a, const AlgebraElement& b) const { return multiply(a, b); }
  AlgebraElement pow(const AlgebraElement& a, unsigned long e) const {
    return power(a, static_cast<unsigned>(e));
  }
};

struct PolyOps {
  FieldDesc field;
  DegreeCap cap;

  Poly number(const Rational& q) const { return Poly::constant(field, q); }
  Poly atom(const std::string& name) const {
    if (name == "h") return Poly::identity(field);
    if (name == "zeta") return Poly::constant(zeta_in(field));
    throw DomainError("'" + name + "' is not allowed in a polynomial in h");
  }
  Poly neg(const Poly& a) const { return -a; }
  Poly add(const Poly& a, const Poly& b) const { return a + b; }
  Poly sub(const Poly& a, const Poly& b) const { return a - b; }
  Poly mul(const Poly& a, const Poly& b) const { return multiply(a, b, cap); }
  Poly pow(const Poly& a, unsigned long e) const {
    Poly out = Poly::constant(field, 1);
    for (unsigned long i = 0; i < e; ++i) out = multiply(out, a, cap);
    return out;
  }
};

}  // namespace

Expr parse(std::string_view input) { return Parser(input).parse_all(); }

std::string to_string(const Expr& e) {
  auto two = [&](const char* name) {
    return std::string(name) + "(" + to_string(e.children[0]) + "," + to_string(e.children[1]) + ")";
  };
  switch (e.kind) {
    case Expr::Kind::Number: return e.value.get_str();
    case Expr::Kind::Atom: return e.name;
    case Expr::Kind::Neg: return "Neg(" + to_string(e.children[0]) + ")";
    case Expr::Kind::Add: return two("Add");
    case Expr::Kind::Sub: return two("Sub");
    case Expr::Kind::Mul: return two("Mul");
    case Expr::Kind::Pow: return "Pow(" + to_string(e.children[0]) + "," + std::to_string(e.exponent) + ")";
  }
  return "?";
}

AlgebraElement evaluate(const Expr& e, const ContextPtr& ctx) {
  return fold<AlgebraElement>(e, AlgebraOps{ctx, generators(ctx)});
}

Poly evaluate_poly(const Expr& e, const FieldDesc& field, DegreeCap cap) {
  return fold<Poly>(e, PolyOps{field, cap});
}

AlgebraElement parse_element(std::string_view input, const ContextPtr& ctx) {
  return evaluate(parse(input), ctx);
}

Poly parse_poly(std::string_view input, const FieldDesc& field, DegreeCap cap) {
  return evaluate_poly(parse(input), field, cap);
}

}  // namespace gha
