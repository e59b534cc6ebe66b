#pragma once

/**
 * Truncated formal Laurent series in t^-1 over F_p.
 *
 * A series is a polynomial part (coefficients of t^0, t^1, ...) plus the
 * fractional coefficients x_1, ..., x_N of t^-1, ..., t^-N.  The precision N
 * is part of the value: coefficients past index N are unknown, never zero.
 */

#include <cstddef>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "algebra.hpp"

namespace lcf {

/// The series is known to vanish through t^-N, so its degree is < bound (= -N).
struct BelowPrecision {
  int bound;
  friend bool operator==(const BelowPrecision&, const BelowPrecision&) = default;
};

/// Exact degree, or a BelowPrecision marker when every known coefficient is zero.
using SeriesDegree = std::variant<int, BelowPrecision>;

class LaurentSeries {
 public:
  /// `frac[n-1]` is the coefficient of t^-n; precision is frac.size().
  LaurentSeries(Polynomial poly_part, std::vector<Residue> frac);

  static LaurentSeries zero(const Field& field, std::size_t precision);
  /// num/den with fractional coefficients exact through index `precision`.
  static LaurentSeries from_rational(const Polynomial& num, const Polynomial& den,
                                     std::size_t precision);
  static LaurentSeries from_rational(const RationalFunction& r, std::size_t precision) {
    return from_rational(r.num(), r.den(), precision);
  }

  const Field& field() const noexcept { return poly_.field(); }
  const Polynomial& poly_part() const noexcept { return poly_; }
  std::span<const Residue> frac() const noexcept { return frac_; }
  std::size_t precision() const noexcept { return frac_.size(); }

  /// Coefficient of t^-n for 1 <= n <= precision.
  Residue frac_coeff(std::size_t n) const { return frac_.at(n - 1); }

  SeriesDegree degree() const;
  bool has_known_nonzero() const { return std::holds_alternative<int>(degree()); }

  /// Keeps the first `precision` fractional coefficients (no-op if already shorter).
  LaurentSeries truncated(std::size_t precision) const;

  /// Reciprocal by coefficient recurrence.  For deg x = d and precision N the
  /// result has precision N + 2d; throws ZeroSeries if no known coefficient
  /// is nonzero and InsufficientPrecision if N + 2d < 0 (the polynomial part
  /// of the reciprocal would not be determined).
  LaurentSeries inverse() const;

  LaurentSeries operator-() const;
  /// Coefficientwise; the result precision is the smaller of the two.
  friend LaurentSeries operator+(const LaurentSeries& x, const LaurentSeries& y);
  friend LaurentSeries operator-(const LaurentSeries& x, const LaurentSeries& y);
  friend bool operator==(const LaurentSeries&, const LaurentSeries&) = default;

 private:
  Polynomial poly_;
  std::vector<Residue> frac_;
};

LaurentSeries series_from_rational(const Polynomial& num, const Polynomial& den,
                                   std::size_t precision);
LaurentSeries series_add(const LaurentSeries& x, const LaurentSeries& y);
LaurentSeries series_invert(const LaurentSeries& x);
/// x = poly + frac, with frac carrying x's precision and a zero polynomial part.
std::pair<Polynomial, LaurentSeries> series_split(const LaurentSeries& x);
SeriesDegree series_degree(const LaurentSeries& x);

}  // namespace lcf
