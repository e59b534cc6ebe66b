#include "laurent.hpp"

#include <algorithm>
#include <string>

namespace lcf {

LaurentSeries::LaurentSeries(Polynomial poly_part, std::vector<Residue> frac)
    : poly_(std::move(poly_part)), frac_(std::move(frac)) {
  for (auto& c : frac_) c = poly_.field().reduce(c);
}

LaurentSeries LaurentSeries::zero(const Field& field, std::size_t precision) {
  return LaurentSeries(Polynomial(field), std::vector<Residue>(precision, 0));
}

LaurentSeries LaurentSeries::from_rational(const Polynomial& num, const Polynomial& den,
                                           std::size_t precision) {
  auto [quot, rem] = poly_divmod(num, den);
  const Field& f = den.field();
  const auto d = static_cast<std::size_t>(den.degree());
  const Residue lead_inv = f.inv(den.leading());

  // Long division of rem/den one power of t^-1 at a time: shift the
  // remainder up, read off the t^d coefficient, subtract that multiple of den.
  std::vector<Residue> r(d + 1, 0);
  for (std::size_t i = 0; i < d; ++i) r[i] = rem.coeff(i);
  std::vector<Residue> frac(precision, 0);
  for (std::size_t n = 0; n < precision; ++n) {
    std::rotate(r.rbegin(), r.rbegin() + 1, r.rend());  // r *= t (top slot was zero)
    const Residue c = f.mul(r[d], lead_inv);
    frac[n] = c;
    if (c != 0) {
      for (std::size_t j = 0; j <= d; ++j) r[j] = f.sub(r[j], f.mul(c, den.coeff(j)));
    }
  }
  return LaurentSeries(std::move(quot), std::move(frac));
}

SeriesDegree LaurentSeries::degree() const {
  if (!poly_.is_zero()) return poly_.degree();
  for (std::size_t n = 1; n <= frac_.size(); ++n) {
    if (frac_[n - 1] != 0) return -static_cast<int>(n);
  }
  return BelowPrecision{-static_cast<int>(frac_.size())};
}

LaurentSeries LaurentSeries::truncated(std::size_t precision) const {
  if (precision >= frac_.size()) return *this;
  return LaurentSeries(poly_, std::vector<Residue>(frac_.begin(), frac_.begin() + precision));
}

LaurentSeries LaurentSeries::inverse() const {
  const SeriesDegree sd = degree();
  if (!std::holds_alternative<int>(sd)) {
    throw Error(ErrorCode::ZeroSeries, "cannot invert a series with no known nonzero coefficient");
  }
  const long long d = std::get<int>(sd);
  const long long n_known = static_cast<long long>(frac_.size());
  const long long new_precision = n_known + 2 * d;
  if (new_precision < 0) {
    throw Error(ErrorCode::InsufficientPrecision,
                "reciprocal of a degree " + std::to_string(d) + " series known to precision " +
                    std::to_string(n_known) + " has an undetermined polynomial part");
  }
  const Field& f = field();

  auto coeff_at = [&](long long exponent) -> Residue {
    if (exponent >= 0) return poly_.coeff(static_cast<std::size_t>(exponent));
    return frac_[static_cast<std::size_t>(-exponent - 1)];
  };

  // x = t^d * (u_0 + u_1 t^-1 + ...), u_0 != 0, with u_0..u_{m-1} known.
  const auto m = static_cast<std::size_t>(n_known + d + 1);
  std::vector<Residue> u(m);
  for (std::size_t i = 0; i < m; ++i) u[i] = coeff_at(d - static_cast<long long>(i));

  const Residue u0_inv = f.inv(u[0]);
  std::vector<Residue> w(m, 0);
  w[0] = u0_inv;
  for (std::size_t i = 1; i < m; ++i) {
    Residue acc = 0;
    for (std::size_t j = 1; j <= i; ++j) acc = f.add(acc, f.mul(u[j], w[i - j]));
    w[i] = f.neg(f.mul(acc, u0_inv));
  }

  // 1/x = sum_i w_i t^(-d-i).
  std::vector<Residue> poly;
  std::vector<Residue> frac(static_cast<std::size_t>(new_precision), 0);
  for (std::size_t i = 0; i < m; ++i) {
    const long long exponent = -d - static_cast<long long>(i);
    if (exponent >= 0) {
      if (poly.size() <= static_cast<std::size_t>(exponent)) poly.resize(exponent + 1, 0);
      poly[static_cast<std::size_t>(exponent)] = w[i];
    } else {
      frac[static_cast<std::size_t>(-exponent - 1)] = w[i];
    }
  }
  return LaurentSeries(Polynomial(f, std::move(poly)), std::move(frac));
}

LaurentSeries LaurentSeries::operator-() const {
  LaurentSeries r = *this;
  r.poly_ = -r.poly_;
  for (auto& c : r.frac_) c = field().neg(c);
  return r;
}

LaurentSeries operator+(const LaurentSeries& x, const LaurentSeries& y) {
  require_same_field(x.field(), y.field());
  const std::size_t n = std::min(x.precision(), y.precision());
  std::vector<Residue> frac(n);
  for (std::size_t i = 0; i < n; ++i) frac[i] = x.field().add(x.frac_[i], y.frac_[i]);
  return LaurentSeries(x.poly_ + y.poly_, std::move(frac));
}

LaurentSeries operator-(const LaurentSeries& x, const LaurentSeries& y) { return x + (-y); }

LaurentSeries series_from_rational(const Polynomial& num, const Polynomial& den,
                                   std::size_t precision) {
  return LaurentSeries::from_rational(num, den, precision);
}

LaurentSeries series_add(const LaurentSeries& x, const LaurentSeries& y) { return x + y; }

LaurentSeries series_invert(const LaurentSeries& x) { return x.inverse(); }

std::pair<Polynomial, LaurentSeries> series_split(const LaurentSeries& x) {
  std::vector<Residue> frac(x.frac().begin(), x.frac().end());
  return {x.poly_part(), LaurentSeries(Polynomial(x.field()), std::move(frac))};
}

SeriesDegree series_degree(const LaurentSeries& x) { return x.degree(); }

}  // namespace lcf
