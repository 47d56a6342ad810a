#include <gtest/gtest.h>

#include "gha/errors.hpp"
#include "gha/expr.hpp"
#include "gha/format.hpp"
#include "gha/morphisms.hpp"
#include "support/random.hpp"

namespace gha {
namespace {

const FieldDesc kQ = FieldDesc::rationals();

ContextPtr ctx_for(const char* f, const FieldDesc& field = kQ) { return Context::make(parse_poly(f, field)); }
FieldElement q(const Rational& v) { return FieldElement(kQ, v); }

DerivationSpec images(const ContextPtr& ctx, const char* dx, const char* dy, const char* dh) {
  return {ctx, parse_element(dx, ctx), parse_element(dy, ctx), parse_element(dh, ctx)};
}

TEST(Derivation, Check) {
  for (const char* f : {"h^2", "h^3 + h + 1", "2*h + 1", "0"}) {
    const auto ctx = ctx_for(f);
    EXPECT_TRUE(check_derivation(DerivationSpec::diagonal(ctx, q(1)))) << f;
    EXPECT_TRUE(check_derivation(DerivationSpec::zero(ctx))) << f;
    EXPECT_FALSE(check_derivation(images(ctx, "x", "0", "0"))) << f;
  }
  const auto ctx = ctx_for("h^2");
  EXPECT_TRUE(check_derivation(images(ctx, "x*z", "-z*y", "0")));
  // Inner derivations [w, -] always pass.
  EXPECT_TRUE(check_derivation(images(ctx, "h*x - x*h", "h*y - y*h", "0")));
  EXPECT_TRUE(check_derivation(images(ctx, "x*x - x*x", "x*y - y*x", "x*h - h*x")));
}

TEST(Derivation, Apply) {
  const auto ctx = ctx_for("h^2");
  const auto d = DerivationSpec::diagonal(ctx, q(1));
  const auto x2y = parse_element("x^2*y", ctx);
  EXPECT_EQ(apply_derivation(d, x2y), x2y);
  EXPECT_TRUE(apply_derivation(d, generators(ctx).z).is_zero());
  const auto one = AlgebraElement::scalar(ctx, Rational(1));
  EXPECT_TRUE(apply_derivation(d, one).is_zero());
  EXPECT_TRUE(apply_derivation(images(ctx, "x*z", "-z*y", "h^2"), one).is_zero());
}

TEST(Derivation, DiagonalActsByDegree) {
  testing::Random rng(4);
  const auto ctx = ctx_for("h^3 + h");
  const auto d = DerivationSpec::diagonal(ctx, q(Rational(5, 3)));
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = rng.element(ctx, 3, 2);
    AlgebraElement expected(ctx);
    for (const auto& [l, part] : homogeneous_parts(a)) expected += part * q(Rational(5 * l, 3));
    EXPECT_EQ(apply_derivation(d, a), expected);
  }
}

TEST(Derivation, LeibnizOnProducts) {
  testing::Random rng(6);
  const auto ctx = ctx_for("h^2");
  const auto d = images(ctx, "x*z", "-z*y", "0");
  ASSERT_TRUE(check_derivation(d));
  for (int trial = 0; trial < 15; ++trial) {
    const auto a = rng.element(ctx, 2, 2);
    const auto b = rng.element(ctx, 2, 2);
    EXPECT_EQ(apply_derivation(d, a * b), apply_derivation(d, a) * b + a * apply_derivation(d, b));
  }
}

TEST(Derivation, HomogeneousParts) {
  const auto ctx = ctx_for("h^2");
  auto parts = derivation_homogeneous_parts(DerivationSpec::diagonal(ctx, q(1)));
  ASSERT_EQ(parts.size(), 1U);
  EXPECT_EQ(parts.begin()->first, 0);

  parts = derivation_homogeneous_parts(images(ctx, "0", "0", "x"));
  ASSERT_EQ(parts.size(), 1U);
  EXPECT_EQ(parts.begin()->first, 1);

  const auto mixed = images(ctx, "x", "-y", "x");
  parts = derivation_homogeneous_parts(mixed);
  ASSERT_EQ(parts.size(), 2U);
  EXPECT_TRUE(parts.contains(0));
  EXPECT_TRUE(parts.contains(1));
  EXPECT_EQ(parts.at(0).im_x, mixed.im_x);
  EXPECT_TRUE(parts.at(0).im_h.is_zero());
  EXPECT_EQ(parts.at(1).im_h, mixed.im_h);

  AlgebraElement sx(ctx), sy(ctx), sh(ctx);
  for (const auto& [r, part] : derivation_homogeneous_parts(images(ctx, "x + h + x*y", "y^2 - 1", "x^3 + h"))) {
    sx += part.im_x;
    sy += part.im_y;
    sh += part.im_h;
  }
  EXPECT_EQ(sx, parse_element("x + h + x*y", ctx));
  EXPECT_EQ(sy, parse_element("y^2 - 1", ctx));
  EXPECT_EQ(sh, parse_element("x^3 + h", ctx));
}

TEST(Derivation, ClassifyLocallyFinite) {
  const auto ctx = ctx_for("h^2");
  for (const Rational& lam : {Rational(1), Rational(-2), Rational(5, 3), Rational(3)}) {
    const auto d = DerivationSpec::diagonal(ctx, q(lam));
    EXPECT_TRUE(check_derivation(d));
    EXPECT_EQ(classify_locally_finite(d), q(lam));
  }
  EXPECT_EQ(classify_locally_finite(DerivationSpec::zero(ctx)), q(0));
  EXPECT_EQ(classify_locally_finite(images(ctx, "x*z", "-z*y", "0")), std::nullopt);
  EXPECT_THROW(classify_locally_finite(images(ctx, "x", "0", "0")), DomainError);
  EXPECT_THROW(classify_locally_finite(DerivationSpec::diagonal(ctx_for("h"), q(1))), DomainError);
}

TEST(Derivation, NilpotencyProbe) {
  const auto ctx = ctx_for("h^2");
  const auto g = generators(ctx);
  const auto d = DerivationSpec::diagonal(ctx, q(1));
  const auto probe = derivation_power_bounded(d, g.x, 10);
  ASSERT_TRUE(std::holds_alternative<NotNilpotentWithin>(probe));
  EXPECT_EQ(std::get<NotNilpotentWithin>(probe).max_iter, 10U);

  auto hit = derivation_power_bounded(d, g.h, 5);
  ASSERT_TRUE(std::holds_alternative<NilpotentAt>(hit));
  EXPECT_EQ(std::get<NilpotentAt>(hit).k, 1U);

  hit = derivation_power_bounded(DerivationSpec::zero(ctx), g.x + g.y, 5);
  ASSERT_TRUE(std::holds_alternative<NilpotentAt>(hit));
  EXPECT_EQ(std::get<NilpotentAt>(hit).k, 1U);
}

TEST(Aut, Examples) {
  auto group = automorphism_group(*ctx_for("h^3 + h"));
  EXPECT_EQ(group.n, 3);
  EXPECT_EQ(group.cyclic_order, 2U);
  EXPECT_EQ(group.generator.a, q(-1));
  EXPECT_TRUE(group.generator.b.is_zero());
  EXPECT_EQ(group.description(), "C* x Z_2");

  group = automorphism_group(*ctx_for("h^5"));
  EXPECT_EQ(group.cyclic_order, 4U);
  EXPECT_EQ(group.field, FieldDesc::cyclotomic(4));
  EXPECT_TRUE(group.generator.b.is_zero());

  group = automorphism_group(*ctx_for("h^3 + h + 1"));
  EXPECT_EQ(group.cyclic_order, 1U);
  EXPECT_EQ(group.description(), "C*");

  group = automorphism_group(*ctx_for("h^7 + h^4"));
  EXPECT_EQ(group.cyclic_order, 3U);
  EXPECT_EQ(group.working_divisors, (std::vector<unsigned>{1, 3}));

  EXPECT_THROW(automorphism_group(*ctx_for("h + 1")), DomainError);
}

TEST(Aut, ShiftedExampleHasNonzeroB) {
  // f(h) = g(h - 1) + 1 with g = h^3 + h: the symmetry h -> -h of g becomes
  // h -> -h + 2.
  const auto group = automorphism_group(*ctx_for("h^3 - 3*h^2 + 4*h - 1"));
  EXPECT_EQ(group.cyclic_order, 2U);
  EXPECT_EQ(group.generator.a, q(-1));
  EXPECT_EQ(group.generator.b, q(2));
}

TEST(Aut, StoredPairsSatisfyConstraints) {
  for (const char* f : {"h^3 + h", "h^5", "h^7 + h^4", "h^4", "h^6", "h^3 - 3*h^2 + 4*h - 1", "h^9 + h^3 - 2*h"}) {
    const auto ctx = ctx_for(f);
    const auto group = automorphism_group(*ctx);
    const auto& [a, b] = group.generator;
    EXPECT_TRUE(satisfies_automorphism_condition(ctx->f(), group.generator)) << f;
    EXPECT_TRUE(a.pow(group.n - 1).is_one()) << f;
    EXPECT_TRUE(a.pow(group.cyclic_order).is_one()) << f;
    for (unsigned j = 1; j < group.cyclic_order; ++j) EXPECT_FALSE(a.pow(j).is_one()) << f;
    const Poly fe = embed(ctx->f(), group.field);
    const FieldElement one(group.field, 1);
    const FieldElement expected_b = (a - one) * fe.coefficient(group.n - 1) /
                                    (fe.coefficient(group.n) * FieldElement(group.field, group.n));
    EXPECT_EQ(b, expected_b) << f;
    EXPECT_EQ((group.n - 1) % static_cast<long>(group.cyclic_order), 0) << f;
  }
}

TEST(Aut, XFixingMap) {
  const auto ctx = ctx_for("h^3 + h");
  const auto g = generators(ctx);
  const XFixingPair flip{q(-1), q(0)};
  EXPECT_EQ(apply_x_fixing_automorphism(flip, g.h), -g.h);
  EXPECT_EQ(apply_x_fixing_automorphism(flip, g.y), -g.y);
  EXPECT_EQ(apply_x_fixing_automorphism(flip, g.x), g.x);
  EXPECT_EQ(apply_x_fixing_automorphism(flip, g.z), -g.z);
  const XFixingPair identity{q(1), q(0)};
  const auto a = parse_element("x^2*h*y + 3*y^2 - h^2", ctx);
  EXPECT_EQ(apply_x_fixing_automorphism(identity, a), a);
  EXPECT_THROW(apply_x_fixing_automorphism(flip, generators(ctx_for("h^3 + h + 1")).x), DomainError);
}

TEST(Aut, HomomorphismGroupLawAndCentrality) {
  testing::Random rng(2024);
  for (const char* f : {"h^3 + h", "h^5", "h^7 + h^4", "h^3 - 3*h^2 + 4*h - 1"}) {
    const auto ctx = ctx_for(f);
    const auto group = automorphism_group(*ctx);
    const auto big = ctx->with_field(group.field);
    const auto gens = generators(big);
    const auto& pair = group.generator;
    for (int trial = 0; trial < 8; ++trial) {
      const auto u = rng.element(ctx, 2, 2);
      const auto v = rng.element(ctx, 2, 2);
      EXPECT_EQ(apply_x_fixing_automorphism(pair, multiply(u, v)),
                multiply(apply_x_fixing_automorphism(pair, u), apply_x_fixing_automorphism(pair, v)))
          << f;
    }
    for (const auto& w : {gens.x, gens.y, gens.h}) {
      AlgebraElement image = w;
      for (unsigned j = 0; j < group.cyclic_order; ++j) image = apply_x_fixing_automorphism(pair, image);
      EXPECT_EQ(image, w) << f;
      const FieldElement lam(group.field, Rational(-7, 2));
      EXPECT_EQ(apply_phi_lambda(lam, apply_x_fixing_automorphism(pair, w)),
                apply_x_fixing_automorphism(pair, apply_phi_lambda(lam, w)))
          << f;
    }
  }
}

TEST(Aut, CyclotomicBaseField) {
  const FieldDesc q4 = FieldDesc::cyclotomic(4);
  auto group = automorphism_group(*ctx_for("h^3 + zeta*h", q4));
  EXPECT_EQ(group.cyclic_order, 2U);
  EXPECT_TRUE(satisfies_automorphism_condition(parse_poly("h^3 + zeta*h", q4), group.generator));
  group = automorphism_group(*ctx_for("h^5 + zeta*h", q4));
  EXPECT_EQ(group.cyclic_order, 4U);
  group = automorphism_group(*ctx_for("h^5 + zeta*h^3", q4));
  EXPECT_EQ(group.cyclic_order, 2U);
}

}  // namespace
}  // namespace gha
