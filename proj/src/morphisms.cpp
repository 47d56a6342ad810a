#include "gha/morphisms.hpp"

#include <numeric>

#include "gha/errors.hpp"

namespace gha {

DerivationSpec DerivationSpec::zero(const ContextPtr& ctx) {
  return {ctx, AlgebraElement(ctx), AlgebraElement(ctx), AlgebraElement(ctx)};
}

DerivationSpec DerivationSpec::diagonal(const ContextPtr& ctx, const FieldElement& lambda) {
  const auto g = generators(ctx);
  return {ctx, g.x * lambda, g.y * (-lambda), AlgebraElement(ctx)};
}

namespace {

AlgebraElement x_power(const ContextPtr& ctx, unsigned i) {
  return AlgebraElement::monomial(ctx, i, Poly::constant(ctx->field(), 1), 0);
}

AlgebraElement y_power(const ContextPtr& ctx, unsigned k) {
  return AlgebraElement::monomial(ctx, 0, Poly::constant(ctx->field(), 1), k);
}

// D(g(h)) = sum_j c_j D(h^j), with D(h^j) = D(h^{j-1}) h + h^{j-1} D(h).
AlgebraElement derive_polynomial(const DerivationSpec& d, const Poly& g) {
  const ContextPtr& ctx = d.ctx;
  AlgebraElement out(ctx);
  if (g.is_constant() || d.im_h.is_zero()) return out;
  const AlgebraElement h = AlgebraElement::polynomial(ctx, Poly::identity(ctx->field()));
  AlgebraElement h_prev = AlgebraElement::scalar(ctx, Rational(1));  // h^{j-1}
  AlgebraElement d_power(ctx);                                       // D(h^{j-1})
  const auto c = g.coefficients();
  for (std::size_t j = 1; j < c.size(); ++j) {
    d_power = multiply(d_power, h) + multiply(h_prev, d.im_h);
    h_prev = multiply(h_prev, h);
    if (!c[j].is_zero()) out += d_power * c[j];
  }
  return out;
}

}  // namespace

AlgebraElement apply_derivation(const DerivationSpec& d, const AlgebraElement& a) {
  const ContextPtr& ctx = d.ctx;
  AlgebraElement out(ctx);
  for (const auto& [key, g] : a.terms()) {
    const auto [i, k] = key;
    const AlgebraElement xi = x_power(ctx, i);
    const AlgebraElement gk = AlgebraElement::monomial(ctx, 0, g, k);  // g y^k
    const AlgebraElement xig = AlgebraElement::monomial(ctx, i, g, 0);  // x^i g

    // D(x^i) g y^k
    if (!d.im_x.is_zero()) {
      for (unsigned p = 0; p < i; ++p) {
        out += multiply(multiply(x_power(ctx, p), d.im_x), multiply(x_power(ctx, i - 1 - p), gk));
      }
    }
    // x^i D(g) y^k
    const AlgebraElement dg = derive_polynomial(d, g);
    if (!dg.is_zero()) out += multiply(multiply(xi, dg), y_power(ctx, k));
    // x^i g D(y^k)
    if (!d.im_y.is_zero()) {
      for (unsigned q = 0; q < k; ++q) {
        out += multiply(multiply(xig, y_power(ctx, q)), multiply(d.im_y, y_power(ctx, k - 1 - q)));
      }
    }
  }
  return out;
}

bool check_derivation(const DerivationSpec& d) {
  const ContextPtr& ctx = d.ctx;
  for (const auto* im : {&d.im_x, &d.im_y, &d.im_h}) {
    if (!im->context()->same_algebra(*ctx)) throw DomainError("derivation images belong to another algebra");
  }
  const auto gen = generators(ctx);
  const AlgebraElement f_h = AlgebraElement::polynomial(ctx, ctx->f());
  const AlgebraElement d_f = derive_polynomial(d, ctx->f());

  // hx = x f(h)
  if (multiply(d.im_h, gen.x) + multiply(gen.h, d.im_x) != multiply(d.im_x, f_h) + multiply(gen.x, d_f)) {
    return false;
  }
  // yh = f(h) y
  if (multiply(d.im_y, gen.h) + multiply(gen.y, d.im_h) != multiply(d_f, gen.y) + multiply(f_h, d.im_y)) {
    return false;
  }
  // yx - xy = f(h) - h
  const AlgebraElement lhs = multiply(d.im_y, gen.x) + multiply(gen.y, d.im_x) -
                             multiply(d.im_x, gen.y) - multiply(gen.x, d.im_y);
  return lhs == d_f - d.im_h;
}

std::map<long, DerivationSpec> derivation_homogeneous_parts(const DerivationSpec& d) {
  std::map<long, DerivationSpec> parts;
  auto slot = [&](long r) -> DerivationSpec& {
    return parts.try_emplace(r, DerivationSpec::zero(d.ctx)).first->second;
  };
  for (const auto& [l, part] : homogeneous_parts(d.im_x)) slot(l - 1).im_x = part;
  for (const auto& [l, part] : homogeneous_parts(d.im_y)) slot(l + 1).im_y = part;
  for (const auto& [l, part] : homogeneous_parts(d.im_h)) slot(l).im_h = part;
  return parts;
}

std::optional<FieldElement> classify_locally_finite(const DerivationSpec& d) {
  if (d.ctx->n() <= 1) throw DomainError("locally finite classification requires deg f > 1");
  if (!check_derivation(d)) throw DomainError("images do not define a derivation");
  if (!d.im_h.is_zero()) return std::nullopt;
  FieldElement lambda(d.ctx->field());
  if (!d.im_x.is_zero()) {
    if (d.im_x.terms().size() != 1) return std::nullopt;
    const auto& [key, g] = *d.im_x.terms().begin();
    if (key != TermKey{1, 0} || !g.is_constant()) return std::nullopt;
    lambda = g.coefficient(0);
  }
  if (d.im_y != generators(d.ctx).y * (-lambda)) return std::nullopt;
  return lambda;
}

NilpotencyProbe derivation_power_bounded(const DerivationSpec& d, const AlgebraElement& a,
                                         unsigned max_iter) {
  if (a.is_zero()) return NilpotentAt{0};
  AlgebraElement current = a;
  for (unsigned k = 1; k <= max_iter; ++k) {
    current = apply_derivation(d, current);
    if (current.is_zero()) return NilpotentAt{k};
  }
  return NotNilpotentWithin{max_iter};
}

// ---------------------------------------------------------------------------
// Automorphisms

std::string AutGroup::description() const {
  if (cyclic_order == 1) return "C*";
  return "C* x Z_" + std::to_string(cyclic_order);
}

bool satisfies_automorphism_condition(const Poly& f, const XFixingPair& pair) {
  const FieldDesc field = compositum(compositum(f.field(), pair.a.field()), pair.b.field());
  const Poly F = embed(f, field);
  const FieldElement a = embed(pair.a, field);
  const FieldElement b = embed(pair.b, field);
  const Poly substitution = Poly::monomial(a, 1) + Poly::constant(b);
  return compose(F, substitution) == F * a + Poly::constant(b);
}

namespace {

bool has_irrational_coefficient(const Poly& f) {
  for (const auto& c : f.coefficients()) {
    if (!c.is_rational()) return true;
  }
  return false;
}

// Primitive d-th roots of unity, canonical one first.
std::vector<FieldElement> primitive_roots(const FieldDesc& base, unsigned d, bool all) {
  if (d == 1) return {FieldElement(base, 1)};
  if (d == 2) return {FieldElement(base, -1)};
  const FieldDesc field = compositum(base, FieldDesc::cyclotomic(d));
  const FieldElement root = embed(FieldElement::zeta(FieldDesc::cyclotomic(d)), field);
  std::vector<FieldElement> roots{root};
  if (all) {
    for (unsigned e = 2; e < d; ++e) {
      if (std::gcd(e, d) == 1) roots.push_back(root.pow(e));
    }
  }
  return roots;
}

}  // namespace

AutGroup automorphism_group(const Context& ctx) {
  const long n = ctx.n();
  if (n <= 1) throw DomainError("automorphism group is computed only for deg f > 1");
  const Poly& f = ctx.f();
  const auto order = static_cast<unsigned>(n - 1);
  const bool try_all = has_irrational_coefficient(f);

  AutGroup group{n, 1, ctx.field(), {FieldElement(ctx.field(), 1), FieldElement(ctx.field())}, {}};
  for (unsigned d = 1; d <= order; ++d) {
    if (order % d != 0) continue;
    for (const FieldElement& a : primitive_roots(ctx.field(), d, try_all)) {
      const FieldDesc& field = a.field();
      const FieldElement an = embed(f.leading_coefficient(), field);
      const FieldElement an1 = embed(f.coefficient(static_cast<std::size_t>(n - 1)), field);
      // a^{n-1} = 1 and b = (a - 1) a_{n-1} / (n a_n)
      const FieldElement b = (a - FieldElement(field, 1)) * an1 / (an * Rational(n));
      XFixingPair pair{a, b};
      if (!satisfies_automorphism_condition(f, pair)) continue;
      group.working_divisors.push_back(d);
      if (d > group.cyclic_order) {
        group.cyclic_order = d;
        group.field = field;
        group.generator = std::move(pair);
      }
      break;
    }
  }
  return group;
}

AlgebraElement apply_x_fixing_automorphism(const XFixingPair& pair, const AlgebraElement& e) {
  const ContextPtr& source = e.context();
  if (pair.a.is_zero()) throw DomainError("x-fixing automorphism requires a != 0");
  if (!satisfies_automorphism_condition(source->f(), pair)) {
    throw DomainError("pair (" + to_string(pair.a) + ", " + to_string(pair.b) +
                      ") does not satisfy f(ah + b) = a f(h) + b");
  }
  const FieldDesc field =
      compositum(compositum(source->field(), pair.a.field()), pair.b.field());
  const ContextPtr target = source->with_field(field);
  const FieldElement a = embed(pair.a, field);
  const Poly substitution = Poly::monomial(a, 1) + Poly::constant(embed(pair.b, field));
  Terms out;
  for (const auto& [key, g] : e.terms()) {
    out.emplace(key, compose(embed(g, field), substitution, target->cap()) * a.pow(key.second));
  }
  return AlgebraElement(target, std::move(out));
}

}  // namespace gha
