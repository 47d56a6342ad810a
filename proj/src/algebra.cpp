#include "gha/algebra.hpp"

#include <vector>

#include "gha/errors.hpp"

namespace gha {

namespace {

void add_term(Terms& terms, const TermKey& key, const Poly& g) {
  if (g.is_zero()) return;
  auto [it, inserted] = terms.try_emplace(key, g);
  if (inserted) return;
  it->second += g;
  if (it->second.is_zero()) terms.erase(it);
}

// Memoized sigma^e(g) for one coefficient g.
class SigmaPowers {
 public:
  SigmaPowers(const Context& ctx, const Poly& g) : ctx_(ctx), g_(g) {}

  const Poly& operator()(unsigned e) {
    if (e == 0 || g_.is_constant()) return g_;
    auto it = cache_.find(e);
    if (it == cache_.end()) it = cache_.emplace(e, ctx_.sigma(g_, e)).first;
    return it->second;
  }

 private:
  const Context& ctx_;
  const Poly& g_;
  std::map<unsigned, Poly> cache_;
};

}  // namespace

// ---------------------------------------------------------------------------
// Context

Context::Context(Private, Poly f, std::size_t degree_cap) : f_(std::move(f)), cap_{degree_cap} {}

ContextPtr Context::make(Poly f, std::size_t degree_cap) {
  return std::make_shared<const Context>(Private{}, std::move(f), degree_cap);
}

const Poly& Context::sigma_h(unsigned k) const {
  {
    std::lock_guard lock(mutex_);
    auto it = sigma_cache_.find(k);
    if (it != sigma_cache_.end()) return it->second;
  }
  Poly value = k == 0 ? Poly::identity(field()) : compose(f_, sigma_h(k - 1), cap_);
  std::lock_guard lock(mutex_);
  return sigma_cache_.emplace(k, std::move(value)).first->second;
}

Poly Context::sigma(const Poly& g, unsigned k) const {
  if (k == 0 || g.is_constant()) return g;
  return compose(g, sigma_h(k), cap_);
}

const Terms& Context::y_power_x_power(unsigned k, unsigned j) const {
  {
    std::lock_guard lock(mutex_);
    auto it = yx_cache_.find({k, j});
    if (it != yx_cache_.end()) return it->second;
  }
  Terms value;
  const Poly one = Poly::constant(field(), 1);
  if (k == 0 || j == 0) {
    value.emplace(TermKey{j, k}, one);
  } else {
    // y^k x^j = y^{k-1} (x^j y + x^{j-1} (sigma^j(h) - h))
    for (const auto& [key, p] : y_power_x_power(k - 1, j)) {
      add_term(value, {key.first, key.second + 1}, p);
    }
    // Right factor (sigma^j(h) - h) moves left past y^b as sigma^{b+j}(h) - sigma^b(h).
    for (const auto& [key, p] : y_power_x_power(k - 1, j - 1)) {
      const unsigned b = key.second;
      add_term(value, key, multiply(p, sigma_h(b + j) - sigma_h(b), cap_));
    }
  }
  std::lock_guard lock(mutex_);
  return yx_cache_.emplace(TermKey{k, j}, std::move(value)).first->second;
}

ContextPtr Context::with_field(const FieldDesc& target) const {
  if (target == field()) return shared_from_this();
  return make(embed(f_, target), cap_.value);
}

// ---------------------------------------------------------------------------
// AlgebraElement

AlgebraElement::AlgebraElement(ContextPtr ctx) : ctx_(std::move(ctx)) {}

AlgebraElement::AlgebraElement(ContextPtr ctx, Terms terms) : ctx_(std::move(ctx)) {
  for (auto& [key, g] : terms) {
    if (g.field() != ctx_->field()) throw DomainError("term coefficient outside " + ctx_->field().name());
    if (!g.is_zero()) terms_.emplace(key, std::move(g));
  }
}

AlgebraElement AlgebraElement::monomial(ContextPtr ctx, unsigned i, Poly g, unsigned k) {
  Terms terms;
  terms.emplace(TermKey{i, k}, std::move(g));
  return AlgebraElement(std::move(ctx), std::move(terms));
}

AlgebraElement AlgebraElement::scalar(ContextPtr ctx, const FieldElement& c) {
  auto field = ctx->field();
  return polynomial(std::move(ctx), Poly::constant(embed(c, field)));
}

AlgebraElement AlgebraElement::scalar(ContextPtr ctx, const Rational& c) {
  auto field = ctx->field();
  return polynomial(std::move(ctx), Poly::constant(field, c));
}

Poly AlgebraElement::coefficient(unsigned i, unsigned k) const {
  auto it = terms_.find({i, k});
  return it == terms_.end() ? Poly(ctx_->field()) : it->second;
}

void AlgebraElement::check_same_context(const AlgebraElement& rhs) const {
  if (!ctx_->same_algebra(*rhs.ctx_)) {
    throw DomainError("operands belong to different algebras");
  }
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& rhs) {
  check_same_context(rhs);
  for (const auto& [key, g] : rhs.terms_) add_term(terms_, key, g);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& rhs) {
  check_same_context(rhs);
  for (const auto& [key, g] : rhs.terms_) add_term(terms_, key, -g);
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const FieldElement& c) {
  const FieldElement scalar = embed(c, ctx_->field());
  if (scalar.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, g] : terms_) g *= scalar;
  return *this;
}

AlgebraElement AlgebraElement::operator-() const {
  AlgebraElement out = *this;
  for (auto& [key, g] : out.terms_) g = -g;
  return out;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) { return multiply(a, b); }

bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
  return a.ctx_->same_algebra(*b.ctx_) && a.terms_ == b.terms_;
}

// ---------------------------------------------------------------------------

Generators generators(const ContextPtr& ctx) {
  const FieldDesc& field = ctx->field();
  const Poly one = Poly::constant(field, 1);
  const Poly h = Poly::identity(field);
  Terms z;
  z.emplace(TermKey{1, 1}, one);
  z.emplace(TermKey{0, 0}, -h);
  return {AlgebraElement::monomial(ctx, 1, one, 0), AlgebraElement::monomial(ctx, 0, one, 1),
          AlgebraElement::polynomial(ctx, h), AlgebraElement(ctx, std::move(z))};
}

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) {
  if (!a.context()->same_algebra(*b.context())) {
    throw DomainError("operands belong to different algebras");
  }
  const Context& ctx = *a.context();
  Terms out;
  // (x^i g y^k)(x^j g' y^l) = sum over y^k x^j = sum x^s p y^t of
  //   x^{i+s} sigma^s(g) p sigma^t(g') y^{t+l}
  std::vector<SigmaPowers> right;
  for (const auto& [key, g2] : b.terms()) right.emplace_back(ctx, g2);
  for (const auto& [left_key, g] : a.terms()) {
    const auto [i, k] = left_key;
    SigmaPowers left(ctx, g);
    auto right_powers = right.begin();
    for (const auto& [right_key, g2] : b.terms()) {
      const auto [j, l] = right_key;
      for (const auto& [mid_key, p] : ctx.y_power_x_power(k, j)) {
        const auto [s, t] = mid_key;
        Poly c = multiply(left(s), p, ctx.cap());
        c = multiply(c, (*right_powers)(t), ctx.cap());
        add_term(out, {i + s, t + l}, c);
      }
      ++right_powers;
    }
  }
  return AlgebraElement(a.context(), std::move(out));
}

AlgebraElement commutator(const AlgebraElement& a, const AlgebraElement& b) {
  return multiply(a, b) - multiply(b, a);
}

AlgebraElement power(const AlgebraElement& a, unsigned e) {
  AlgebraElement result = AlgebraElement::scalar(a.context(), Rational(1));
  AlgebraElement base = a;
  while (e != 0) {
    if (e & 1U) result = multiply(result, base);
    e >>= 1U;
    if (e != 0) base = multiply(base, base);
  }
  return result;
}

std::map<long, AlgebraElement> homogeneous_parts(const AlgebraElement& a) {
  std::map<long, AlgebraElement> parts;
  for (const auto& [key, g] : a.terms()) {
    const long l = static_cast<long>(key.first) - static_cast<long>(key.second);
    auto it = parts.try_emplace(l, a.context()).first;
    it->second += AlgebraElement::monomial(a.context(), key.first, g, key.second);
  }
  return parts;
}

Degree degree(const AlgebraElement& a) {
  if (a.is_zero()) return {0};
  auto parts = homogeneous_parts(a);
  if (parts.size() != 1) return {};
  return {parts.begin()->first};
}

bool in_h0(const AlgebraElement& a) {
  for (const auto& [key, g] : a.terms()) {
    if (key.first != key.second) return false;
  }
  return true;
}

AlgebraElement sigma_h0(const AlgebraElement& theta) {
  if (!in_h0(theta)) throw DomainError("sigma is only defined on H_0 (terms x^k g y^k)");
  const Context& ctx = *theta.context();
  const Poly h = Poly::identity(ctx.field());
  Terms out;
  for (const auto& [key, g] : theta.terms()) {
    const unsigned k = key.first;
    // x^k sigma(g) y^k + x^{k-1} (sigma^k(h) - h) g y^{k-1}
    add_term(out, key, ctx.sigma(g, 1));
    if (k >= 1) add_term(out, {k - 1, k - 1}, multiply(ctx.sigma_h(k) - h, g, ctx.cap()));
  }
  return AlgebraElement(theta.context(), std::move(out));
}

AlgebraElement apply_iota(const AlgebraElement& a) {
  Terms out;
  for (const auto& [key, g] : a.terms()) out.emplace(TermKey{key.second, key.first}, g);
  return AlgebraElement(a.context(), std::move(out));
}

AlgebraElement apply_phi_lambda(const FieldElement& lambda, const AlgebraElement& a) {
  if (lambda.is_zero()) throw DomainError("phi_lambda requires lambda != 0");
  const FieldElement lam = embed(lambda, a.context()->field());
  const FieldElement lam_inv = lam.inverse();
  Terms out;
  for (const auto& [key, g] : a.terms()) {
    const auto [i, k] = key;
    const FieldElement scale = i >= k ? lam.pow(i - k) : lam_inv.pow(k - i);
    out.emplace(key, g * scale);
  }
  return AlgebraElement(a.context(), std::move(out));
}

AlgebraElement embed(const AlgebraElement& a, const ContextPtr& target) {
  const FieldDesc& field = target->field();
  if (!(embed(a.context()->f(), field) == target->f())) {
    throw DomainError("target context is not the same algebra over a larger field");
  }
  Terms out;
  for (const auto& [key, g] : a.terms()) out.emplace(key, embed(g, field));
  return AlgebraElement(target, std::move(out));
}

}  // namespace gha
