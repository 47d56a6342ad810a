#include <gtest/gtest.h>

#include "gha/errors.hpp"
#include "gha/expr.hpp"
#include "gha/format.hpp"
#include "support/random.hpp"

namespace gha {
namespace {

const FieldDesc kQ = FieldDesc::rationals();

ContextPtr ctx_for(const char* f, const FieldDesc& field = kQ) { return Context::make(parse_poly(f, field)); }

TEST(Parse, Ast) {
  EXPECT_EQ(to_string(parse("y*x - x*y")), "Sub(Mul(y,x),Mul(x,y))");
  EXPECT_EQ(to_string(parse("x^2*(h^3+1)*y")), "Mul(Mul(Pow(x,2),Add(Pow(h,3),1)),y)");
  EXPECT_EQ(to_string(parse("-x^2")), "Neg(Pow(x,2))");
  EXPECT_EQ(to_string(parse("2h")), "Mul(2,h)");
  EXPECT_EQ(to_string(parse("3/4 - 1")), "Sub(3/4,1)");
  EXPECT_EQ(to_string(parse("  z ")), "z");
}

TEST(Parse, Errors) {
  try {
    parse("x^-1");
    FAIL() << "expected a syntax error";
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.offset(), 2U);
    EXPECT_EQ(e.expected(), (std::vector<std::string>{"nonnegative integer"}));
  }
  for (const char* bad : {"", "x +", "(x", "x)", "w", "1/0", "x^", "x**y", "h^99999999999999999999"}) {
    EXPECT_THROW(parse(bad), SyntaxError) << '"' << bad << '"';
  }
  try {
    parse("x + )");
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.offset(), 4U);
  }
}

TEST(Evaluate, Examples) {
  const auto ctx = ctx_for("h^2");
  EXPECT_EQ(parse_element("y*x - x*y", ctx), AlgebraElement::polynomial(ctx, parse_poly("h^2 - h", kQ)));
  EXPECT_EQ(parse_element("h*x", ctx), AlgebraElement::monomial(ctx, 1, parse_poly("h^2", kQ), 0));
  EXPECT_TRUE(parse_element("z - (x*y - h)", ctx).is_zero());
  EXPECT_EQ(to_string(parse_element("y*x", ctx)), "(h^2 - h) + x^1 * (1) * y^1");
  EXPECT_THROW(parse_element("zeta*x", ctx), DomainError);
  EXPECT_THROW(parse_poly("x + h", kQ), DomainError);
}

TEST(Evaluate, NonCommutativity) {
  for (const char* f : {"h^2", "h^3 + h + 1", "2*h - 1"}) {
    const auto ctx = ctx_for(f);
    const auto diff = parse_element("y*x", ctx) - parse_element("x*y", ctx);
    EXPECT_EQ(diff, AlgebraElement::polynomial(ctx, ctx->f() - Poly::identity(kQ))) << f;
  }
}

TEST(Evaluate, Cyclotomic) {
  const FieldDesc q3 = FieldDesc::cyclotomic(3);
  const auto ctx = ctx_for("h^2 + zeta", q3);
  const auto a = parse_element("zeta^3*x - x", ctx);
  EXPECT_TRUE(a.is_zero());
  const auto b = parse_element("(zeta + 1)*h*y", ctx);
  EXPECT_EQ(to_string(b), "((zeta + 1)*h) * y^1");
}

TEST(Format, RoundTrip) {
  testing::Random rng(88);
  for (const char* f : {"h^2", "h^3 - 1/2*h"}) {
    const auto ctx = ctx_for(f);
    for (int trial = 0; trial < 30; ++trial) {
      const auto a = rng.element(ctx, 3, 3, 4);
      const std::string text = to_string(a);
      const auto back = parse_element(text, ctx);
      EXPECT_EQ(back, a) << text;
      EXPECT_EQ(to_string(back), text);
    }
  }
  const FieldDesc q5 = FieldDesc::cyclotomic(5);
  const auto ctx = ctx_for("h^2", q5);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = rng.element(ctx, 2, 2);
    EXPECT_EQ(parse_element(to_string(a), ctx), a) << to_string(a);
  }
}

TEST(Format, JsonMatchesText) {
  testing::Random rng(89);
  for (const FieldDesc& field : {kQ, FieldDesc::cyclotomic(4)}) {
    const auto ctx = ctx_for("h^3 + h", field);
    for (int trial = 0; trial < 20; ++trial) {
      const auto a = rng.element(ctx, 3, 2);
      const auto doc = to_json(a);
      EXPECT_EQ(doc.at("field"), field.name());
      EXPECT_EQ(doc.at("terms").size(), a.terms().size());
      const auto back = element_from_json(nlohmann::json::parse(doc.dump()), ctx);
      EXPECT_EQ(back, a);
      EXPECT_EQ(to_string(back), to_string(a));
    }
  }
}

TEST(Format, JsonShape) {
  const auto ctx = ctx_for("h^2");
  const auto doc = to_json(parse_element("x*(1/2*h + 3)*y^2", ctx));
  EXPECT_EQ(doc.dump(),
            R"({"f":["0","0","1"],"field":"Q","terms":[{"i":1,"k":2,"poly":["3","1/2"]}]})");
  EXPECT_THROW(element_from_json(doc, ctx_for("h^3")), DomainError);
  EXPECT_EQ(to_string(AlgebraElement(ctx)), "0");
}

}  // namespace
}  // namespace gha
