#include <gtest/gtest.h>

#include "gha/errors.hpp"
#include "gha/expr.hpp"
#include "gha/format.hpp"
#include "gha/structure.hpp"
#include "support/random.hpp"

namespace gha {
namespace {

const FieldDesc kQ = FieldDesc::rationals();

ContextPtr ctx_for(const char* f) { return Context::make(parse_poly(f, kQ)); }
Poly P(const char* text) { return parse_poly(text, kQ); }

TEST(Classify, Examples) {
  auto c = classify(*ctx_for("3*h + 1"));
  EXPECT_EQ(c.deg_f, 1);
  EXPECT_TRUE(c.is_domain);
  EXPECT_TRUE(c.is_noetherian);
  EXPECT_TRUE(c.is_generalized_down_up);
  EXPECT_EQ(c.center_description, CenterDescription::NotComputedDegOne);

  c = classify(*ctx_for("5"));
  EXPECT_FALSE(c.is_domain);
  EXPECT_FALSE(c.is_noetherian);
  EXPECT_TRUE(c.is_generalized_down_up);
  EXPECT_EQ(c.center_description, CenterDescription::PolynomialInZ);

  c = classify(*ctx_for("h^2"));
  EXPECT_TRUE(c.is_domain);
  EXPECT_FALSE(c.is_noetherian);
  EXPECT_FALSE(c.is_generalized_down_up);
  EXPECT_EQ(c.center_description, CenterDescription::PolynomialInZ);

  c = classify(*ctx_for("0"));
  EXPECT_EQ(c.deg_f, 0);
  EXPECT_FALSE(c.is_domain);
  EXPECT_TRUE(c.is_generalized_down_up);
}

TEST(Classify, FlagsConsistent) {
  for (const char* f : {"0", "1", "h", "2*h - 1", "h^2", "h^5 + 3", "-h^3"}) {
    const auto c = classify(*ctx_for(f));
    if (c.is_noetherian) EXPECT_TRUE(c.is_generalized_down_up) << f;
    EXPECT_EQ(c.is_domain, c.deg_f >= 1) << f;
  }
}

TEST(Witness, SquareNeverMember) {
  const auto reports = noetherian_witness(*ctx_for("h^2"), 3);
  ASSERT_EQ(reports.size(), 4U);
  for (unsigned n = 0; n < 4; ++n) {
    EXPECT_EQ(reports[n].n, n);
    EXPECT_FALSE(reports[n].is_member);
    // sigma^j(h) = h^(2^j): the gcd over j = 1..n+1 is h^2.
    EXPECT_EQ(reports[n].generator_gcd, P("h^2"));
  }
}

TEST(Witness, LinearAndZero) {
  auto reports = noetherian_witness(*ctx_for("2*h"), 0);
  ASSERT_EQ(reports.size(), 1U);
  EXPECT_TRUE(reports[0].is_member);
  EXPECT_EQ(reports[0].generator_gcd, P("h"));

  reports = noetherian_witness(*ctx_for("0"), 2);
  ASSERT_EQ(reports.size(), 3U);
  for (const auto& r : reports) {
    EXPECT_FALSE(r.is_member);
    EXPECT_TRUE(r.generator_gcd.is_zero());
  }
}

TEST(Witness, ShiftRequired) {
  EXPECT_THROW(noetherian_witness(*ctx_for("h^2 - 2*h + 2"), 1), DomainError);
  const auto alpha = find_rational_shift(P("h^2 - 2*h + 2"));
  ASSERT_TRUE(alpha.has_value());
  const Poly shifted = shift_to_origin(P("h^2 - 2*h + 2"), *alpha);
  for (const auto& r : noetherian_witness(*Context::make(shifted), 4)) EXPECT_FALSE(r.is_member);

  EXPECT_FALSE(find_rational_shift(P("h^2 + 1")).has_value());
  EXPECT_THROW(noetherian_witness(*ctx_for("h^2 + 1"), 1), DomainError);
}

TEST(Witness, LargeIteratesStayCheap) {
  for (const char* f : {"h^2", "h^3", "h^4 + h^2", "h^3 - h^2 + 2*h"}) {
    for (const auto& r : noetherian_witness(*ctx_for(f), 10)) EXPECT_FALSE(r.is_member) << f;
  }
  for (const char* f : {"h", "-3*h", "1/2*h"}) {
    for (const auto& r : noetherian_witness(*ctx_for(f), 10)) EXPECT_TRUE(r.is_member) << f;
  }
}

TEST(Center, Examples) {
  const auto ctx = ctx_for("h^2");
  const auto g = generators(ctx);
  EXPECT_EQ(center_membership(g.z * g.z), P("h^2"));
  EXPECT_EQ(center_membership(g.h), std::nullopt);
  EXPECT_EQ(center_membership(AlgebraElement::scalar(ctx, Rational(7))), P("7"));
  EXPECT_EQ(center_membership(AlgebraElement(ctx)), P("0"));
  EXPECT_EQ(center_membership(g.x), std::nullopt);
  EXPECT_EQ(center_membership(parse_element("x*y", ctx)), std::nullopt);
  EXPECT_THROW(center_membership(generators(ctx_for("2*h")).z), DomainError);
}

TEST(Center, PowersOfZ) {
  for (const char* f : {"h^2", "h^3 + h + 1", "4"}) {
    const auto ctx = ctx_for(f);
    const auto z = generators(ctx).z;
    for (unsigned k = 0; k <= 4; ++k) {
      EXPECT_EQ(center_membership(power(z, k)), Poly::monomial(FieldElement(kQ, 1), k)) << f;
    }
  }
}

TEST(Center, HomomorphismRoundTrip) {
  testing::Random rng(101);
  const auto ctx = ctx_for("h^3 + h");
  const auto g = generators(ctx);
  for (int trial = 0; trial < 15; ++trial) {
    const Poly p = rng.poly(kQ, 3);
    const Poly q = rng.poly(kQ, 3);
    const auto product = multiply(from_z(ctx, p), from_z(ctx, q));
    EXPECT_EQ(center_membership(product), p * q);
    for (const auto& w : {g.x, g.y, g.h}) EXPECT_TRUE(commutator(product, w).is_zero());
  }
  for (int trial = 0; trial < 30; ++trial) {
    const auto a = rng.element(ctx, 2, 2);
    if (center_membership(a)) {
      for (const auto& w : {g.x, g.y, g.h}) EXPECT_TRUE(commutator(a, w).is_zero());
    } else {
      EXPECT_FALSE(commutator(a, g.x).is_zero() && commutator(a, g.y).is_zero() && commutator(a, g.h).is_zero());
    }
  }
}

TEST(ZH, Examples) {
  for (const char* f : {"h^2", "h^3 + h"}) {
    const auto ctx = ctx_for(f);
    EXPECT_EQ(zh_membership(parse_element("x*h*y", ctx)), std::nullopt) << f;
  }
  const auto ctx = ctx_for("h^2");
  auto rep = zh_membership(parse_element("h^3 + z", ctx));
  ASSERT_TRUE(rep.has_value());
  EXPECT_EQ(*rep, (std::vector<Poly>{P("h^3"), P("1")}));

  const auto z = generators(ctx).z;
  rep = zh_membership(multiply(generators(ctx).h, z * z));
  ASSERT_TRUE(rep.has_value());
  EXPECT_EQ(*rep, (std::vector<Poly>{P("0"), P("0"), P("h")}));

  EXPECT_THROW(zh_membership(generators(ctx).x), DomainError);
  EXPECT_THROW(zh_membership(generators(ctx_for("h")).h), DomainError);
}

TEST(ZH, RoundTrip) {
  testing::Random rng(55);
  for (const char* f : {"h^2", "h^3 + h + 1"}) {
    const auto ctx = ctx_for(f);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<Poly> coeffs;
      for (long k = 0, top = rng.integer(0, 3); k <= top; ++k) coeffs.push_back(rng.poly(kQ, 2));
      while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
      const auto rep = zh_membership(from_zh(ctx, coeffs));
      ASSERT_TRUE(rep.has_value()) << f;
      EXPECT_EQ(*rep, coeffs) << f;
    }
  }
}

TEST(Gradings, Examples) {
  for (const char* f : {"h^3 + h", "h^2", "h^3 + h + 1"}) {
    const auto family = admissible_generator_gradings(*ctx_for(f));
    ASSERT_EQ(family.generators.size(), 1U) << f;
    EXPECT_EQ(family.generators[0], (GradingTriple{1, -1, 0})) << f;
    EXPECT_TRUE(family.contains({5, -5, 0}));
    EXPECT_FALSE(family.contains({1, 1, 0}));
    EXPECT_FALSE(family.contains({0, 0, 1}));
  }
  EXPECT_TRUE(homogenizes_relations(*ctx_for("h^2"), {1, -1, 0}));
  EXPECT_FALSE(homogenizes_relations(*ctx_for("h^2"), {1, -1, 1}));
  EXPECT_THROW(admissible_generator_gradings(*ctx_for("2*h")), DomainError);
}

TEST(Gradings, MonomialF) {
  // f = h^n alone: yx - xy = h^n - h still has two terms, so d_h = 0 again.
  for (const char* f : {"h^2", "h^5", "3*h^4"}) {
    const auto family = admissible_generator_gradings(*ctx_for(f));
    ASSERT_EQ(family.generators.size(), 1U) << f;
    EXPECT_EQ(family.generators[0], (GradingTriple{1, -1, 0})) << f;
  }
}

TEST(Gradings, FamilyMembersHomogenize) {
  for (const char* f : {"h^2 + 1", "h^4 - h^3 + 2", "h^3"}) {
    const auto ctx = ctx_for(f);
    const auto family = admissible_generator_gradings(*ctx);
    for (long dx = -3; dx <= 3; ++dx)
      for (long dy = -3; dy <= 3; ++dy)
        for (long dh = -2; dh <= 2; ++dh) {
          const GradingTriple t{dx, dy, dh};
          EXPECT_EQ(family.contains(t), homogenizes_relations(*ctx, t)) << f << " " << dx << dy << dh;
        }
  }
}

}  // namespace
}  // namespace gha
