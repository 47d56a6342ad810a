#include "gha/poly.hpp"

#include <algorithm>
#include <set>
#include <span>
#include <sstream>

#include "gha/errors.hpp"

namespace gha {

namespace {

void check_same_field(const Poly& a, const Poly& b) {
  if (a.field() != b.field()) {
    throw DomainError("mixed-field polynomials: " + a.field().name() + " and " + b.field().name());
  }
}

void check_cap(long degree, DegreeCap cap) {
  if (degree > static_cast<long>(cap.value)) {
    throw ResourceError("polynomial degree " + std::to_string(degree) + " exceeds cap " +
                        std::to_string(cap.value));
  }
}

// Scales rational coefficients to integers over a common denominator.
std::vector<Integer> integer_coefficients(std::span<const FieldElement> c, Integer& den) {
  den = 1;
  for (const auto& e : c) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), e.rational().get_den_mpz_t());
  std::vector<Integer> out(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Rational& q = c[i].coords()[0];
    mpz_divexact(out[i].get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
    out[i] *= q.get_num();
  }
  return out;
}

Poly multiply_rational(std::span<const FieldElement> ca, std::span<const FieldElement> cb) {
  Integer da;
  Integer db;
  const auto ia = integer_coefficients(ca, da);
  const auto ib = integer_coefficients(cb, db);
  std::vector<Integer> acc(ca.size() + cb.size() - 1);
  for (std::size_t i = 0; i < ia.size(); ++i) {
    if (ia[i] == 0) continue;
    for (std::size_t j = 0; j < ib.size(); ++j) mpz_addmul(acc[i + j].get_mpz_t(), ia[i].get_mpz_t(), ib[j].get_mpz_t());
  }
  const Integer den = da * db;
  const FieldDesc field = FieldDesc::rationals();
  std::vector<FieldElement> out;
  out.reserve(acc.size());
  for (auto& n : acc) {
    Rational q(n, den);
    q.canonicalize();
    out.emplace_back(field, q);
  }
  return Poly(field, std::move(out));
}

}  // namespace

Poly::Poly(const FieldDesc& field, std::vector<FieldElement> coeffs)
    : field_(field), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_) {
    if (c.field() != field_) throw DomainError("coefficient outside " + field_.name());
  }
  strip();
}

void Poly::strip() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Poly Poly::constant(const FieldElement& c) { return Poly(c.field(), {c}); }

Poly Poly::constant(const FieldDesc& field, const Rational& c) {
  return Poly(field, {FieldElement(field, c)});
}

Poly Poly::monomial(const FieldElement& c, std::size_t power) {
  std::vector<FieldElement> coeffs(power + 1, FieldElement(c.field()));
  coeffs[power] = c;
  return Poly(c.field(), std::move(coeffs));
}

Poly Poly::identity(const FieldDesc& field) { return monomial(FieldElement(field, 1), 1); }

Poly Poly::from_rationals(const FieldDesc& field, const std::vector<Rational>& ascending) {
  std::vector<FieldElement> coeffs;
  coeffs.reserve(ascending.size());
  for (const auto& q : ascending) coeffs.emplace_back(field, q);
  return Poly(field, std::move(coeffs));
}

FieldElement Poly::coefficient(std::size_t power) const {
  if (power >= coeffs_.size()) return FieldElement(field_);
  return coeffs_[power];
}

const FieldElement& Poly::leading_coefficient() const {
  if (coeffs_.empty()) throw DomainError("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

FieldElement Poly::operator()(const FieldElement& at) const {
  FieldElement acc(field_);
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    acc *= at;
    acc += coeffs_[i];
  }
  return acc;
}

Poly& Poly::operator+=(const Poly& rhs) {
  check_same_field(*this, rhs);
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), FieldElement(field_));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  strip();
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  check_same_field(*this, rhs);
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), FieldElement(field_));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  strip();
  return *this;
}

Poly& Poly::operator*=(const FieldElement& c) {
  if (c.field() != field_) throw DomainError("scalar outside " + field_.name());
  for (auto& a : coeffs_) a *= c;
  strip();
  return *this;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& a : out.coeffs_) a = -a;
  return out;
}

Poly operator*(const Poly& a, const Poly& b) { return multiply(a, b); }

Poly multiply(const Poly& a, const Poly& b, DegreeCap cap) {
  check_same_field(a, b);
  if (a.is_zero() || b.is_zero()) return Poly(a.field());
  check_cap(a.degree() + b.degree(), cap);
  auto ca = a.coefficients();
  auto cb = b.coefficients();
  if (a.field().is_rationals()) return multiply_rational(ca, cb);
  std::vector<FieldElement> out(ca.size() + cb.size() - 1, FieldElement(a.field()));
  for (std::size_t i = 0; i < ca.size(); ++i) {
    if (ca[i].is_zero()) continue;
    for (std::size_t j = 0; j < cb.size(); ++j) out[i + j].add_product(ca[i], cb[j]);
  }
  return Poly(a.field(), std::move(out));
}

Poly derivative(const Poly& p) {
  auto c = p.coefficients();
  if (c.size() <= 1) return Poly(p.field());
  std::vector<FieldElement> out;
  out.reserve(c.size() - 1);
  for (std::size_t i = 1; i < c.size(); ++i) out.push_back(c[i] * Rational(static_cast<long>(i)));
  return Poly(p.field(), std::move(out));
}

std::pair<Poly, Poly> divmod(const Poly& p, const Poly& divisor) {
  check_same_field(p, divisor);
  if (divisor.is_zero()) throw DomainError("polynomial division by zero");
  const FieldDesc& field = p.field();
  if (p.degree() < divisor.degree()) return {Poly(field), p};
  std::vector<FieldElement> rem(p.coefficients().begin(), p.coefficients().end());
  auto den = divisor.coefficients();
  const std::size_t dn = den.size();
  std::vector<FieldElement> quot(rem.size() - dn + 1, FieldElement(field));
  const FieldElement lead_inv = divisor.leading_coefficient().inverse();
  for (std::size_t i = rem.size(); i-- >= dn;) {
    if (rem[i].is_zero()) continue;
    FieldElement c = rem[i] * lead_inv;
    const std::size_t shift = i - dn + 1;
    for (std::size_t j = 0; j < dn; ++j) rem[shift + j] -= c * den[j];
    quot[shift] = std::move(c);
  }
  rem.resize(dn - 1, FieldElement(field));
  return {Poly(field, std::move(quot)), Poly(field, std::move(rem))};
}

Poly compose(const Poly& g, const Poly& f, DegreeCap cap) {
  check_same_field(g, f);
  if (g.is_constant()) return g;
  if (f.degree() > 0) check_cap(g.degree() * f.degree(), cap);
  auto c = g.coefficients();
  Poly acc = Poly::constant(c.back());
  for (std::size_t i = c.size() - 1; i-- > 0;) {
    acc = multiply(acc, f, cap);
    acc += Poly::constant(c[i]);
  }
  return acc;
}

Poly sigma_power_h(const Poly& f, unsigned k, DegreeCap cap) {
  Poly acc = Poly::identity(f.field());
  for (unsigned i = 0; i < k; ++i) acc = compose(f, acc, cap);
  return acc;
}

Poly monic(const Poly& p) {
  if (p.is_zero()) return p;
  return p * p.leading_coefficient().inverse();
}

Poly gcd(const Poly& p, const Poly& q) {
  check_same_field(p, q);
  Poly a = p;
  Poly b = q;
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

bool divides(const Poly& d, const Poly& p) {
  if (d.is_zero()) return p.is_zero();
  return divmod(p, d).second.is_zero();
}

std::optional<Poly> decompose_as_polynomial_in(const Poly& g, const Poly& F) {
  check_same_field(g, F);
  if (F.degree() < 1) throw DomainError("decomposition requires deg F >= 1");
  const FieldDesc& field = g.field();
  const long dF = F.degree();
  Poly rest = g;
  std::vector<FieldElement> out;
  // Peel the leading term c * F^e off the remainder until it is constant.
  while (!rest.is_constant()) {
    const long dg = rest.degree();
    if (dg % dF != 0) return std::nullopt;
    const auto e = static_cast<std::size_t>(dg / dF);
    FieldElement c = rest.leading_coefficient() / F.leading_coefficient().pow(e);
    if (out.size() <= e) out.resize(e + 1, FieldElement(field));
    out[e] = c;
    Poly power = Poly::constant(FieldElement(field, 1));
    for (std::size_t i = 0; i < e; ++i) power = multiply(power, F);
    rest -= power * c;
  }
  if (!rest.is_zero()) {
    if (out.empty()) out.resize(1, FieldElement(field));
    out[0] = rest.coefficient(0);
  }
  return Poly(field, std::move(out));
}

Poly cyclotomic_polynomial(unsigned m) {
  return Poly::from_rationals(FieldDesc::rationals(), cyclotomic_coefficients(m));
}

Poly embed(const Poly& p, const FieldDesc& target) {
  std::vector<FieldElement> out;
  out.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) out.push_back(embed(c, target));
  return Poly(target, std::move(out));
}

namespace {

std::vector<Integer> positive_divisors(Integer n) {
  n = abs(n);
  static const Integer kLimit = Integer("1000000000000");
  if (n > kLimit) throw DomainError("coefficient too large for rational root search");
  std::vector<std::pair<Integer, unsigned>> factors;
  for (Integer p = 2; p * p <= n; ++p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) factors.emplace_back(p, e);
  }
  if (n > 1) factors.emplace_back(n, 1);
  std::vector<Integer> divisors{1};
  for (const auto& [p, e] : factors) {
    const std::size_t count = divisors.size();
    Integer pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < count; ++i) divisors.push_back(divisors[i] * pk);
    }
  }
  return divisors;
}

}  // namespace

std::vector<Rational> rational_roots(const Poly& p) {
  if (p.is_zero()) throw DomainError("every value is a root of the zero polynomial");
  std::vector<Rational> q;
  for (const auto& c : p.coefficients()) q.push_back(c.rational());
  // Clear denominators.
  Integer lcm_den = 1;
  for (const auto& c : q) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> a;
  for (const auto& c : q) a.push_back(Integer(c * lcm_den));
  std::set<Rational> roots;
  std::size_t low = 0;
  while (a[low] == 0) ++low;
  if (low > 0) roots.insert(Rational(0));
  const Poly reduced = [&] {
    std::vector<Rational> tail(q.begin() + static_cast<long>(low), q.end());
    return Poly::from_rationals(FieldDesc::rationals(), tail);
  }();
  if (reduced.degree() >= 1) {
    for (const auto& num : positive_divisors(a[low])) {
      for (const auto& den : positive_divisors(a.back())) {
        for (int sign : {1, -1}) {
          Rational candidate(num * sign, den);
          candidate.canonicalize();
          if (reduced(FieldElement(FieldDesc::rationals(), candidate)).is_zero()) {
            roots.insert(candidate);
          }
        }
      }
    }
  }
  return {roots.begin(), roots.end()};
}

Poly shift_to_origin(const Poly& f, const FieldElement& alpha) {
  Poly h_plus_alpha = Poly::identity(f.field()) + Poly::constant(alpha);
  return compose(f, h_plus_alpha) - Poly::constant(alpha);
}

std::string to_string(const Poly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  auto c = p.coefficients();
  bool first = true;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i].is_zero()) continue;
    std::string body;
    bool negative = false;
    if (c[i].is_rational()) {
      const Rational& q = c[i].rational();
      negative = q < 0;
      Rational mag = abs(q);
      if (i == 0) {
        body = mag.get_str();
      } else if (mag != 1) {
        body = mag.get_str() + "*";
      }
    } else {
      body = "(" + to_string(c[i]) + ")";
      if (i > 0) body += "*";
    }
    if (i > 0) {
      body += var;
      if (i > 1) body += "^" + std::to_string(i);
    }
    if (first) {
      out << (negative ? "-" : "") << body;
    } else {
      out << (negative ? " - " : " + ") << body;
    }
    first = false;
  }
  return out.str();
}

}  // namespace gha
