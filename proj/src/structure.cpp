#include "gha/structure.hpp"

#include <array>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

#include "gha/errors.hpp"

namespace gha {

Classification classify(const Context& ctx) {
  // The zero polynomial counts as a constant here.
  const long d = ctx.f().is_zero() ? 0 : ctx.n();
  return Classification{
      .deg_f = d,
      .is_domain = d >= 1,
      .is_noetherian = d == 1,
      .is_generalized_down_up = d <= 1,
      .center_description =
          d == 1 ? CenterDescription::NotComputedDegOne : CenterDescription::PolynomialInZ,
  };
}

// ---------------------------------------------------------------------------
// Witness chain

std::optional<FieldElement> find_rational_shift(const Poly& f) {
  const Poly fixed = f - Poly::identity(f.field());
  if (fixed.is_zero()) return FieldElement(f.field());
  for (const auto& c : fixed.coefficients()) {
    if (!c.is_rational()) return std::nullopt;
  }
  auto roots = rational_roots(fixed);
  if (roots.empty()) return std::nullopt;
  for (const auto& r : roots) {
    if (r == 0) return FieldElement(f.field());
  }
  return FieldElement(f.field(), roots.front());
}

namespace {

// g(r) reduced modulo `mod`; exact (under the cap) when mod is zero.
Poly compose_mod(const Poly& g, const Poly& r, const Poly& mod, DegreeCap cap) {
  if (mod.is_zero()) return compose(g, r, cap);
  auto c = g.coefficients();
  if (c.empty()) return g;
  Poly acc = Poly::constant(c.back());
  for (std::size_t i = c.size() - 1; i-- > 0;) {
    acc = divmod(multiply(acc, r, cap), mod).second;
    acc += Poly::constant(c[i]);
  }
  return divmod(acc, mod).second;
}

}  // namespace

std::vector<WitnessReport> noetherian_witness(const Context& ctx, unsigned max_n) {
  const Poly& f = ctx.f();
  if (!f.coefficient(0).is_zero()) {
    std::string msg = "noetherian witness requires f(0) = 0; ";
    std::optional<FieldElement> alpha;
    try {
      alpha = find_rational_shift(f);
    } catch (const DomainError&) {
    }
    if (alpha) {
      msg += "shift by alpha = " + to_string(*alpha) +
             " (a root of f(h) - h) and use F(h) = f(h + alpha) - alpha = " +
             to_string(shift_to_origin(f, *alpha));
    } else {
      msg += "f(h) - h has no root in Q; irrational shifts are not supported";
    }
    throw DomainError(msg);
  }

  const Poly h = Poly::identity(ctx.field());
  // Under the convention deg 0 = 0 the chain is strict exactly when deg f != 1.
  const long degree_or_zero = f.is_zero() ? 0 : f.degree();

  std::vector<WitnessReport> reports;
  Poly running_gcd(ctx.field());
  Poly previous = h;  // sigma^{j-1}(h) modulo running_gcd
  for (unsigned n = 0; n <= max_n; ++n) {
    // sigma^{n+1}(h) = f(sigma^n(h)), only ever needed modulo the running gcd.
    Poly current = compose_mod(f, previous, running_gcd, ctx.cap());
    running_gcd = gcd(running_gcd, current);
    previous = running_gcd.is_zero() ? current : divmod(current, running_gcd).second;
    const bool member = divides(running_gcd, h);
    if (member != (degree_or_zero == 1)) {
      throw std::logic_error("witness chain contradicts the Noetherian criterion");
    }
    reports.push_back({n, running_gcd, member});
  }
  return reports;
}

// ---------------------------------------------------------------------------
// Center and C[z, h]

AlgebraElement from_zh(const ContextPtr& ctx, const std::vector<Poly>& coefficients) {
  const AlgebraElement z = generators(ctx).z;
  AlgebraElement out(ctx);
  AlgebraElement z_power = AlgebraElement::scalar(ctx, Rational(1));
  for (std::size_t k = 0; k < coefficients.size(); ++k) {
    if (k > 0) z_power = multiply(z_power, z);
    if (coefficients[k].is_zero()) continue;
    out += multiply(AlgebraElement::polynomial(ctx, coefficients[k]), z_power);
  }
  return out;
}

AlgebraElement from_z(const ContextPtr& ctx, const Poly& p) {
  std::vector<Poly> coefficients;
  for (const auto& c : p.coefficients()) coefficients.push_back(Poly::constant(embed(c, ctx->field())));
  return from_zh(ctx, coefficients);
}

namespace {

class ZPowers {
 public:
  explicit ZPowers(const ContextPtr& ctx) : z_(generators(ctx).z) {
    powers_.push_back(AlgebraElement::scalar(ctx, Rational(1)));
  }
  const AlgebraElement& operator[](unsigned k) {
    while (powers_.size() <= k) powers_.push_back(multiply(powers_.back(), z_));
    return powers_[k];
  }

 private:
  AlgebraElement z_;
  std::vector<AlgebraElement> powers_;
};

// Top diagonal index K of a nonzero H_0 element.
unsigned top_diagonal(const AlgebraElement& a) { return a.terms().rbegin()->first.first; }

}  // namespace

std::optional<Poly> center_membership(const AlgebraElement& a) {
  const ContextPtr& ctx = a.context();
  if (ctx->n() == 1) throw DomainError("center membership requires deg f != 1");
  if (!in_h0(a)) return std::nullopt;
  const FieldDesc& field = ctx->field();
  ZPowers z(ctx);
  std::vector<FieldElement> out;
  AlgebraElement rest = a;
  while (!rest.is_zero()) {
    const unsigned K = top_diagonal(rest);
    const Poly c = rest.coefficient(K, K);
    if (!c.is_constant()) return std::nullopt;
    const FieldElement lead = c.coefficient(0);
    if (out.size() <= K) out.resize(K + 1, FieldElement(field));
    out[K] = lead;
    rest -= z[K] * lead;
  }
  return Poly(field, std::move(out));
}

std::optional<std::vector<Poly>> zh_membership(const AlgebraElement& a) {
  const ContextPtr& ctx = a.context();
  if (ctx->n() <= 1) throw DomainError("C[z, h] membership requires deg f > 1");
  if (!in_h0(a)) throw DomainError("C[z, h] membership requires an element of H_0");
  ZPowers z(ctx);
  std::vector<Poly> out;
  AlgebraElement rest = a;
  while (!rest.is_zero()) {
    const unsigned K = top_diagonal(rest);
    const Poly c = rest.coefficient(K, K);
    // The (K, K) coefficient of p(h) z^K is sigma^K(p).
    std::optional<Poly> p = K == 0 ? std::optional<Poly>(c)
                                   : decompose_as_polynomial_in(c, ctx->sigma_h(K));
    if (!p) return std::nullopt;
    if (out.size() <= K) out.resize(K + 1, Poly(ctx->field()));
    out[K] = *p;
    rest -= multiply(AlgebraElement::polynomial(ctx, *p), z[K]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Gradings

namespace {

using Row = std::array<long, 3>;

// Each relation contributes "lhs degree - monomial degree = 0" for every
// monomial on its right-hand side.
std::vector<Row> relation_constraints(const Poly& f) {
  std::vector<Row> rows;
  const auto c = f.coefficients();
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (c[j].is_zero()) continue;
    // hx = x f(h) and yh = f(h) y: d_h = j d_h
    if (j != 1) rows.push_back({0, 0, 1 - static_cast<long>(j)});
  }
  const Poly rhs = f - Poly::identity(f.field());
  const auto r = rhs.coefficients();
  for (std::size_t j = 0; j < r.size(); ++j) {
    if (r[j].is_zero()) continue;
    // yx - xy = f(h) - h: d_x + d_y = j d_h
    rows.push_back({1, 1, -static_cast<long>(j)});
  }
  return rows;
}

long dot(const Row& row, const GradingTriple& t) { return row[0] * t.dx + row[1] * t.dy + row[2] * t.dh; }

// Z-basis of the integer kernel: column operations on the identity keep a
// unimodular basis, one row at a time.
std::vector<GradingTriple> integer_kernel(const std::vector<Row>& rows) {
  std::vector<GradingTriple> basis{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  for (const auto& row : rows) {
    // Euclid on the values row . basis[i], combining basis vectors.
    for (;;) {
      std::size_t pivot = basis.size();
      for (std::size_t i = 0; i < basis.size(); ++i) {
        const long v = dot(row, basis[i]);
        if (v == 0) continue;
        if (pivot == basis.size() || std::labs(v) < std::labs(dot(row, basis[pivot]))) pivot = i;
      }
      if (pivot == basis.size()) break;
      const long pv = dot(row, basis[pivot]);
      bool reduced_other = false;
      for (std::size_t i = 0; i < basis.size(); ++i) {
        if (i == pivot) continue;
        const long v = dot(row, basis[i]);
        if (v == 0) continue;
        const long q = v / pv;
        basis[i].dx -= q * basis[pivot].dx;
        basis[i].dy -= q * basis[pivot].dy;
        basis[i].dh -= q * basis[pivot].dh;
        reduced_other = true;
      }
      if (!reduced_other) {
        // Only the pivot is nonzero on this row: it leaves the kernel.
        basis.erase(basis.begin() + static_cast<long>(pivot));
        break;
      }
    }
  }
  // Normalize signs: first nonzero coordinate positive.
  for (auto& t : basis) {
    const long lead = t.dx != 0 ? t.dx : (t.dy != 0 ? t.dy : t.dh);
    if (lead < 0) t = {-t.dx, -t.dy, -t.dh};
  }
  return basis;
}

}  // namespace

bool homogenizes_relations(const Context& ctx, const GradingTriple& t) {
  for (const auto& row : relation_constraints(ctx.f())) {
    if (dot(row, t) != 0) return false;
  }
  return true;
}

bool GradingFamily::contains(const GradingTriple& t) const {
  // Solve t = sum c_i g_i over Q, then require integral coefficients.
  const std::size_t m = generators.size();
  std::vector<std::vector<Rational>> a(3, std::vector<Rational>(m + 1));
  for (std::size_t i = 0; i < m; ++i) {
    a[0][i] = generators[i].dx;
    a[1][i] = generators[i].dy;
    a[2][i] = generators[i].dh;
  }
  a[0][m] = t.dx;
  a[1][m] = t.dy;
  a[2][m] = t.dh;
  std::size_t row = 0;
  std::vector<std::size_t> pivot_cols;
  for (std::size_t col = 0; col < m && row < 3; ++col) {
    std::size_t p = row;
    while (p < 3 && a[p][col] == 0) ++p;
    if (p == 3) continue;
    std::swap(a[p], a[row]);
    for (std::size_t r = 0; r < 3; ++r) {
      if (r == row || a[r][col] == 0) continue;
      const Rational factor = a[r][col] / a[row][col];
      for (std::size_t c = col; c <= m; ++c) a[r][c] -= factor * a[row][c];
    }
    pivot_cols.push_back(col);
    ++row;
  }
  for (std::size_t r = row; r < 3; ++r) {
    if (a[r][m] != 0) return false;
  }
  for (std::size_t r = 0; r < row; ++r) {
    const Rational coeff = a[r][m] / a[r][pivot_cols[r]];
    if (coeff.get_den() != 1) return false;
  }
  return true;
}

GradingFamily admissible_generator_gradings(const Context& ctx) {
  if (ctx.n() <= 1) throw DomainError("generator gradings are classified only for deg f > 1");
  return GradingFamily{integer_kernel(relation_constraints(ctx.f()))};
}

}  // namespace gha
