#pragma once

/**
 * Exact arithmetic over prime fields F_p and dense univariate polynomials
 * over them.
 *
 * Residues are stored as canonical representatives in [0, p).  `Field`
 * carries the raw modular operations used by the hot loops (determinants,
 * long division); `FieldElement` is the checked value type that remembers
 * which field it lives in.
 */

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "error.hpp"

namespace lcf {

using Residue = std::uint32_t;

class Field {
 public:
  /// Largest characteristic accepted; keeps products inside 64 bits.
  static constexpr std::uint32_t kMaxCharacteristic = (1u << 31) - 1;

  /// Throws InvalidArgument unless `p` is a prime in [2, kMaxCharacteristic].
  explicit Field(std::uint32_t p);

  std::uint32_t characteristic() const noexcept { return p_; }

  Residue reduce(std::int64_t value) const noexcept;

  Residue add(Residue a, Residue b) const noexcept {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<Residue>(s >= p_ ? s - p_ : s);
  }
  Residue sub(Residue a, Residue b) const noexcept {
    return a >= b ? a - b : static_cast<Residue>(std::uint64_t{a} + p_ - b);
  }
  Residue neg(Residue a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Residue mul(Residue a, Residue b) const noexcept {
    return static_cast<Residue>(std::uint64_t{a} * b % p_);
  }
  /// Throws ZeroInverse for a == 0.
  Residue inv(Residue a) const;
  Residue div(Residue a, Residue b) const { return mul(a, inv(b)); }

  friend bool operator==(const Field&, const Field&) = default;

 private:
  std::uint32_t p_;
};

/// Throws FieldMismatch if the two fields differ.
void require_same_field(const Field& a, const Field& b);

class FieldElement {
 public:
  FieldElement(const Field& field, std::int64_t value)
      : field_(field), value_(field.reduce(value)) {}

  const Field& field() const noexcept { return field_; }
  Residue value() const noexcept { return value_; }
  bool is_zero() const noexcept { return value_ == 0; }

  FieldElement inverse() const;

  FieldElement operator-() const { return raw(field_, field_.neg(value_)); }
  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  friend bool operator==(const FieldElement&, const FieldElement&) = default;

 private:
  static FieldElement raw(const Field& f, Residue v) {
    FieldElement e(f, 0);
    e.value_ = v;
    return e;
  }

  Field field_;
  Residue value_;
};

/// Multiplicative inverse; throws ZeroInverse for zero.
inline FieldElement field_inv(const FieldElement& x) { return x.inverse(); }

/// Dense polynomial over F_p in the variable t, lowest degree first.
class Polynomial {
 public:
  /// Degree of the zero polynomial.
  static constexpr int kZeroDegree = std::numeric_limits<int>::min();

  explicit Polynomial(const Field& field) : field_(field) {}
  Polynomial(const Field& field, std::vector<Residue> coeffs);

  static Polynomial constant(const Field& field, std::int64_t c);
  /// c * t^k
  static Polynomial monomial(const Field& field, std::int64_t c, unsigned k);

  const Field& field() const noexcept { return field_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  int degree() const noexcept {
    return coeffs_.empty() ? kZeroDegree : static_cast<int>(coeffs_.size()) - 1;
  }
  /// Coefficient of t^k; zero past the degree.
  Residue coeff(std::size_t k) const noexcept {
    return k < coeffs_.size() ? coeffs_[k] : 0;
  }
  FieldElement coefficient(std::size_t k) const { return {field_, coeff(k)}; }
  Residue leading() const noexcept { return coeffs_.empty() ? 0 : coeffs_.back(); }
  std::span<const Residue> coeffs() const noexcept { return coeffs_; }

  Polynomial operator-() const;
  Polynomial scaled(Residue c) const;
  /// Multiplies by t^k.
  Polynomial shifted(unsigned k) const;
  Polynomial monic() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void normalize();

  Field field_;
  std::vector<Residue> coeffs_;
};

struct DivMod {
  Polynomial quotient;
  Polynomial remainder;
};

/// Euclidean division a = q*b + r with deg r < deg b.  Throws
/// DivisionByZeroPolynomial when b is zero.
DivMod poly_divmod(const Polynomial& a, const Polynomial& b);

/// Monic greatest common divisor (zero iff both inputs are zero).
Polynomial poly_gcd(Polynomial a, Polynomial b);

/// Rational function num/den, kept in lowest terms with a monic denominator.
class RationalFunction {
 public:
  explicit RationalFunction(const Field& field);
  RationalFunction(Polynomial num, Polynomial den);

  const Field& field() const noexcept { return num_.field(); }
  const Polynomial& num() const noexcept { return num_; }
  const Polynomial& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

 private:
  Polynomial num_;
  Polynomial den_;
};

}  // namespace lcf
