#include "contfrac.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace lcf {

std::vector<int> ContinuedFraction::degrees() const {
  std::vector<int> out;
  out.reserve(partials.size());
  for (const auto& a : partials) out.push_back(a.degree());
  return out;
}

std::vector<int> ContinuedFraction::certified_degrees() const {
  std::vector<int> out = degrees();
  out.resize(std::min(certified, out.size()));
  return out;
}

ContinuedFraction ContinuedFraction::certified_prefix() const {
  ContinuedFraction r = *this;
  r.partials.resize(std::min(certified, partials.size()), Polynomial(field()));
  return r;
}

ContinuedFraction cf_expand_rational(const Polynomial& num, const Polynomial& den) {
  auto [a0, rem] = poly_divmod(num, den);
  std::vector<Polynomial> partials;
  Polynomial a = den;
  Polynomial b = std::move(rem);
  while (!b.is_zero()) {
    auto [q, r] = poly_divmod(a, b);
    partials.push_back(std::move(q));
    a = std::move(b);
    b = std::move(r);
  }
  const std::size_t n = partials.size();
  return ContinuedFraction(std::move(a0), std::move(partials), n, true);
}

ContinuedFraction cf_expand_series(const LaurentSeries& x, std::size_t max_terms) {
  auto [a0, rest] = series_split(x);
  const long long n_total = static_cast<long long>(x.precision());
  ContinuedFraction cf(std::move(a0), {}, 0);
  long long deg_q = 0;
  while (cf.partials.size() < max_terms) {
    const SeriesDegree sd = rest.degree();
    if (!std::holds_alternative<int>(sd)) break;
    const long long d = -static_cast<long long>(std::get<int>(sd));
    // The next reciprocal keeps precision N - 2*deg q_n; negative means the
    // partial quotient is not determined by the prefix.
    if (static_cast<long long>(rest.precision()) - 2 * d < 0) break;
    auto [a, tail] = series_split(rest.inverse());
    deg_q += a.degree();
    if (2 * deg_q > n_total) {
      throw Error(ErrorCode::Internal, "certified partial quotient violates 2*deg(q_n) <= N");
    }
    cf.partials.push_back(std::move(a));
    rest = std::move(tail);
  }
  cf.certified = cf.partials.size();
  return cf;
}

std::vector<Convergent> convergents(const ContinuedFraction& cf) {
  const Field& f = cf.field();
  std::vector<Convergent> rows;
  rows.reserve(cf.partials.size() + 1);
  Polynomial p_prev = Polynomial::constant(f, 1);
  Polynomial q_prev(f);
  Polynomial p = cf.a0;
  Polynomial q = Polynomial::constant(f, 1);
  rows.push_back({0, p, q});
  for (std::size_t n = 1; n <= cf.partials.size(); ++n) {
    const Polynomial& a = cf.partials[n - 1];
    Polynomial p_next = a * p + p_prev;
    Polynomial q_next = a * q + q_prev;
    if (q_next.degree() != q.degree() + a.degree()) {
      throw Error(ErrorCode::Internal,
                  "convergent denominator degree is not additive at n=" + std::to_string(n));
    }
    p_prev = std::exchange(p, std::move(p_next));
    q_prev = std::exchange(q, std::move(q_next));
    rows.push_back({n, p, q});
  }
  return rows;
}

RationalFunction cf_value(const ContinuedFraction& cf) {
  const auto rows = convergents(cf);
  return RationalFunction(rows.back().p, rows.back().q);
}

LaurentSeries cf_eval(const ContinuedFraction& cf, std::size_t precision) {
  const auto rows = convergents(cf);
  return LaurentSeries::from_rational(rows.back().p, rows.back().q, precision);
}

bool approx_error_check(const LaurentSeries& x, const ContinuedFraction& cf, std::size_t n) {
  if (n + 1 > cf.certified) {
    throw Error(ErrorCode::PreconditionViolated,
                "approximation check at n=" + std::to_string(n) + " needs a_{n+1} certified");
  }
  const auto rows = convergents(cf);
  const LaurentSeries diff =
      x - LaurentSeries::from_rational(rows[n].p, rows[n].q, x.precision());
  const SeriesDegree sd = diff.degree();
  if (!std::holds_alternative<int>(sd)) {
    throw Error(ErrorCode::InsufficientPrecision,
                "x - p_n/q_n vanishes to precision " + std::to_string(x.precision()));
  }
  return std::get<int>(sd) == -(rows[n].deg_q() + rows[n + 1].deg_q());
}

Classification classify(const ContinuedFraction& cf, int k) {
  Classification c{k, true, true, true, GMembership::ConsistentSoFar, cf.certified_degrees()};
  for (std::size_t i = 0; i < c.degrees.size(); ++i) {
    const int d = c.degrees[i];
    if (d > k) c.in_F_k = false;
    if (d < k) c.in_S_k = false;
    if (i > 0 && d <= c.degrees[i - 1]) c.is_G_prime = false;
  }
  if (cf.exact && cf.certified == cf.partials.size()) c.g = GMembership::Member;
  return c;
}

}  // namespace lcf
