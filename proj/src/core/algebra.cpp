#include "algebra.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace lcf {
namespace {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace

Field::Field(std::uint32_t p) : p_(p) {
  if (p > kMaxCharacteristic || !is_prime(p)) {
    throw Error(ErrorCode::InvalidArgument,
                "field characteristic " + std::to_string(p) + " is not a supported prime");
  }
}

Residue Field::reduce(std::int64_t value) const noexcept {
  std::int64_t r = value % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<Residue>(r);
}

Residue Field::inv(Residue a) const {
  if (a % p_ == 0) throw Error(ErrorCode::ZeroInverse, "inverse of zero in F_" + std::to_string(p_));
  // Extended Euclid on (a, p).
  std::int64_t r0 = p_, r1 = a, s0 = 0, s1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::tie(r0, r1) = std::pair{r1, r0 - q * r1};
    std::tie(s0, s1) = std::pair{s1, s0 - q * s1};
  }
  return reduce(s0);
}

void require_same_field(const Field& a, const Field& b) {
  if (a != b) {
    throw Error(ErrorCode::FieldMismatch,
                "operands live over F_" + std::to_string(a.characteristic()) + " and F_" +
                    std::to_string(b.characteristic()));
  }
}

FieldElement FieldElement::inverse() const { return raw(field_, field_.inv(value_)); }

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  require_same_field(a.field_, b.field_);
  return FieldElement::raw(a.field_, a.field_.add(a.value_, b.value_));
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  require_same_field(a.field_, b.field_);
  return FieldElement::raw(a.field_, a.field_.sub(a.value_, b.value_));
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  require_same_field(a.field_, b.field_);
  return FieldElement::raw(a.field_, a.field_.mul(a.value_, b.value_));
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  require_same_field(a.field_, b.field_);
  return FieldElement::raw(a.field_, a.field_.div(a.value_, b.value_));
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(const Field& field, std::vector<Residue> coeffs)
    : field_(field), coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c = field_.reduce(c);
  normalize();
}

Polynomial Polynomial::constant(const Field& field, std::int64_t c) {
  return Polynomial(field, {field.reduce(c)});
}

Polynomial Polynomial::monomial(const Field& field, std::int64_t c, unsigned k) {
  std::vector<Residue> coeffs(k + 1, 0);
  coeffs[k] = field.reduce(c);
  return Polynomial(field, std::move(coeffs));
}

void Polynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& c : r.coeffs_) c = field_.neg(c);
  return r;
}

Polynomial Polynomial::scaled(Residue c) const {
  Polynomial r = *this;
  for (auto& x : r.coeffs_) x = field_.mul(x, c);
  r.normalize();
  return r;
}

Polynomial Polynomial::shifted(unsigned k) const {
  if (is_zero()) return *this;
  Polynomial r(field_);
  r.coeffs_.assign(k, 0);
  r.coeffs_.insert(r.coeffs_.end(), coeffs_.begin(), coeffs_.end());
  return r;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(field_.inv(leading()));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  require_same_field(a.field_, b.field_);
  Polynomial r(a.field_);
  r.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < r.coeffs_.size(); ++i) {
    r.coeffs_[i] = a.field_.add(a.coeff(i), b.coeff(i));
  }
  r.normalize();
  return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  require_same_field(a.field_, b.field_);
  Polynomial r(a.field_);
  r.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < r.coeffs_.size(); ++i) {
    r.coeffs_[i] = a.field_.sub(a.coeff(i), b.coeff(i));
  }
  r.normalize();
  return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_field(a.field_, b.field_);
  Polynomial r(a.field_);
  if (a.is_zero() || b.is_zero()) return r;
  const Field& f = a.field_;
  r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      r.coeffs_[i + j] = f.add(r.coeffs_[i + j], f.mul(a.coeffs_[i], b.coeffs_[j]));
    }
  }
  r.normalize();
  return r;
}

DivMod poly_divmod(const Polynomial& a, const Polynomial& b) {
  require_same_field(a.field(), b.field());
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZeroPolynomial, "division by the zero polynomial");
  const Field& f = a.field();
  if (a.degree() < b.degree()) return {Polynomial(f), a};

  std::vector<Residue> rem(a.coeffs().begin(), a.coeffs().end());
  const auto db = static_cast<std::size_t>(b.degree());
  const Residue lead_inv = f.inv(b.leading());
  std::vector<Residue> quot(rem.size() - db, 0);
  for (std::size_t k = quot.size(); k-- > 0;) {
    const Residue c = f.mul(rem[k + db], lead_inv);
    quot[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) {
      rem[k + j] = f.sub(rem[k + j], f.mul(c, b.coeff(j)));
    }
  }
  rem.resize(db);
  return {Polynomial(f, std::move(quot)), Polynomial(f, std::move(rem))};
}

Polynomial poly_gcd(Polynomial a, Polynomial b) {
  require_same_field(a.field(), b.field());
  while (!b.is_zero()) {
    Polynomial r = poly_divmod(a, b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

// ---------------------------------------------------------------------------
// RationalFunction

RationalFunction::RationalFunction(const Field& field)
    : num_(field), den_(Polynomial::constant(field, 1)) {}

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  require_same_field(num_.field(), den_.field());
  if (den_.is_zero()) throw Error(ErrorCode::DivisionByZeroPolynomial, "rational function with zero denominator");
  const Field& f = den_.field();
  if (num_.is_zero()) {
    den_ = Polynomial::constant(f, 1);
    return;
  }
  Polynomial g = poly_gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = poly_divmod(num_, g).quotient;
    den_ = poly_divmod(den_, g).quotient;
  }
  const Residue scale = f.inv(den_.leading());
  num_ = num_.scaled(scale);
  den_ = den_.scaled(scale);
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

}  // namespace lcf
