#include "gha/field.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <regex>
#include <sstream>

#include "gha/errors.hpp"

namespace gha {

namespace {

// Dense polynomials over Q in an auxiliary variable t, ascending order.
// Only used for the cyclotomic reduction machinery.
using QPoly = std::vector<Rational>;

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

QPoly sub(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

// Returns (quotient, remainder). divisor must be nonzero.
std::pair<QPoly, QPoly> divmod(QPoly num, const QPoly& den) {
  trim(num);
  if (num.size() < den.size()) return {{}, num};
  QPoly quot(num.size() - den.size() + 1);
  const Rational& lead = den.back();
  for (std::size_t i = num.size(); i-- >= den.size();) {
    Rational c = num[i] / lead;
    quot[i - den.size() + 1] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < den.size(); ++j) num[i - den.size() + 1 + j] -= c * den[j];
  }
  num.resize(den.size() - 1);
  trim(num);
  trim(quot);
  return {quot, num};
}

std::mutex cyclotomic_mutex;
std::map<unsigned, QPoly>& cyclotomic_table() {
  static std::map<unsigned, QPoly> table;
  return table;
}

QPoly compute_cyclotomic(unsigned m) {
  // t^m - 1 divided by Phi_d for every proper divisor d of m.
  QPoly num(m + 1);
  num[0] = -1;
  num[m] = 1;
  for (unsigned d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    auto [quot, rem] = divmod(num, cyclotomic_coefficients(d));
    num = std::move(quot);
  }
  return num;
}

}  // namespace

FieldDesc FieldDesc::cyclotomic(unsigned m) {
  if (m == 0) throw DomainError("cyclotomic field requires m >= 1");
  return FieldDesc(m);
}

std::size_t FieldDesc::dimension() const { return euler_phi(m_); }

bool FieldDesc::embeds_in(const FieldDesc& target) const noexcept {
  return target.m_ % m_ == 0;
}

std::string FieldDesc::name() const {
  if (is_rationals()) return "Q";
  return "Q(zeta_" + std::to_string(m_) + ")";
}

FieldDesc compositum(const FieldDesc& a, const FieldDesc& b) {
  return FieldDesc::cyclotomic(std::lcm(a.conductor(), b.conductor()));
}

FieldDesc parse_field(const std::string& text) {
  static const std::regex pattern(R"(\s*Q\s*(?:\(\s*zeta_([0-9]+)\s*\))?\s*)");
  std::smatch match;
  if (!std::regex_match(text, match, pattern)) {
    throw DomainError("unrecognized field '" + text + "' (expected Q or Q(zeta_m))");
  }
  if (!match[1].matched) return FieldDesc::rationals();
  unsigned long m = std::stoul(match[1].str());
  if (m == 0 || m > 100000) throw DomainError("cyclotomic conductor out of range: " + match[1].str());
  return FieldDesc::cyclotomic(static_cast<unsigned>(m));
}

unsigned euler_phi(unsigned m) {
  unsigned result = m;
  for (unsigned p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

const std::vector<Rational>& cyclotomic_coefficients(unsigned m) {
  if (m == 0) throw DomainError("cyclotomic polynomial requires m >= 1");
  {
    std::lock_guard lock(cyclotomic_mutex);
    auto it = cyclotomic_table().find(m);
    if (it != cyclotomic_table().end()) return it->second;
  }
  QPoly phi = m == 1 ? QPoly{-1, 1} : compute_cyclotomic(m);
  std::lock_guard lock(cyclotomic_mutex);
  // std::map never invalidates references, and a racing insert stores the same value.
  return cyclotomic_table().emplace(m, std::move(phi)).first->second;
}

// ---------------------------------------------------------------------------

FieldElement::FieldElement() : FieldElement(FieldDesc::rationals()) {}

FieldElement::FieldElement(const FieldDesc& field)
    : field_(field), coords_(field.dimension()) {}

FieldElement::FieldElement(const FieldDesc& field, Rational value) : FieldElement(field) {
  coords_[0] = std::move(value);
  coords_[0].canonicalize();
}

FieldElement FieldElement::from_coords(const FieldDesc& field, std::vector<Rational> coords) {
  FieldElement out(field);
  out.coords_ = std::move(coords);
  out.reduce();
  return out;
}

FieldElement FieldElement::zeta(const FieldDesc& field) {
  std::vector<Rational> t{0, 1};
  return from_coords(field, std::move(t));
}

void FieldElement::reduce() {
  for (auto& c : coords_) c.canonicalize();
  const std::size_t dim = field_.dimension();
  if (coords_.size() > dim) {
    const auto& phi = cyclotomic_coefficients(field_.conductor());
    // Phi_m is monic of degree dim: fold high powers down.
    for (std::size_t i = coords_.size(); i-- > dim;) {
      if (coords_[i] == 0) continue;
      Rational c = coords_[i];
      for (std::size_t j = 0; j <= dim; ++j) coords_[i - dim + j] -= c * phi[j];
    }
  }
  coords_.resize(dim);
}

bool FieldElement::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& c) { return c == 0; });
}

bool FieldElement::is_one() const {
  return coords_[0] == 1 &&
         std::all_of(coords_.begin() + 1, coords_.end(), [](const Rational& c) { return c == 0; });
}

bool FieldElement::is_rational() const {
  return std::all_of(coords_.begin() + 1, coords_.end(), [](const Rational& c) { return c == 0; });
}

const Rational& FieldElement::rational() const {
  if (!is_rational()) throw DomainError("element " + to_string(*this) + " is not rational");
  return coords_[0];
}

void FieldElement::check_same_field(const FieldElement& rhs) const {
  if (field_ != rhs.field_) {
    throw DomainError("mixed-field operands: " + field_.name() + " and " + rhs.field_.name());
  }
}

FieldElement& FieldElement::operator+=(const FieldElement& rhs) {
  check_same_field(rhs);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += rhs.coords_[i];
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& rhs) {
  check_same_field(rhs);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= rhs.coords_[i];
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& rhs) {
  check_same_field(rhs);
  if (coords_.size() == 1) {
    coords_[0] *= rhs.coords_[0];
    return *this;
  }
  coords_ = mul(coords_, rhs.coords_);
  reduce();
  return *this;
}

FieldElement& FieldElement::operator*=(const Rational& rhs) {
  for (auto& c : coords_) c *= rhs;
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& rhs) { return *this *= rhs.inverse(); }

void FieldElement::add_product(const FieldElement& a, const FieldElement& b) {
  check_same_field(a);
  check_same_field(b);
  if (coords_.size() == 1) {
    // mpq addmul has no direct primitive; one temporary keeps it cheap.
    thread_local Rational tmp;
    mpq_mul(tmp.get_mpq_t(), a.coords_[0].get_mpq_t(), b.coords_[0].get_mpq_t());
    coords_[0] += tmp;
    return;
  }
  *this += a * b;
}

FieldElement FieldElement::operator-() const {
  FieldElement out = *this;
  for (auto& c : out.coords_) c = -c;
  return out;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw DomainError("inversion of zero");
  if (coords_.size() == 1) return FieldElement(field_, 1 / coords_[0]);
  // Extended Euclid in Q[t]: find u with a*u = 1 mod Phi_m.
  QPoly r0 = cyclotomic_coefficients(field_.conductor());
  QPoly r1 = coords_;
  trim(r1);
  QPoly s0, s1{1};
  while (r1.size() > 1) {
    auto [q, r] = divmod(r0, r1);
    QPoly s2 = sub(s0, mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r1 is a nonzero constant since Phi_m is irreducible.
  for (auto& c : s1) c /= r1[0];
  return from_coords(field_, std::move(s1));
}

FieldElement FieldElement::pow(unsigned long e) const {
  FieldElement result(field_, 1);
  FieldElement base = *this;
  while (e != 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e != 0) base *= base;
  }
  return result;
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  return a.field_ == b.field_ && a.coords_ == b.coords_;
}

FieldElement embed(const FieldElement& x, const FieldDesc& target) {
  const FieldDesc& source = x.field();
  if (!source.embeds_in(target)) {
    throw DomainError("no embedding of " + source.name() + " into " + target.name());
  }
  if (source == target) return x;
  const unsigned stride = target.conductor() / source.conductor();
  std::vector<Rational> coords;
  auto src = x.coords();
  coords.resize((src.size() - 1) * stride + 1);
  for (std::size_t i = 0; i < src.size(); ++i) coords[i * stride] = src[i];
  return FieldElement::from_coords(target, std::move(coords));
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const FieldElement& x) {
  auto c = x.coords();
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    Rational mag = abs(c[i]);
    if (first) {
      if (c[i] < 0) out << '-';
    } else {
      out << (c[i] < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      out << mag.get_str();
      continue;
    }
    if (mag != 1) out << mag.get_str() << '*';
    out << "zeta";
    if (i > 1) out << '^' << i;
  }
  if (first) return "0";
  return out.str();
}

}  // namespace gha
