#pragma once

/**
 * Continued fractions [a0; a1, a2, ...] over F_p[t].
 *
 * Rational inputs are expanded exactly by the Euclidean algorithm.  Truncated
 * series are expanded only as far as the prefix determines the answer: with
 * N known fractional coefficients, a1..an are certified iff 2*deg(q_n) <= N.
 * Any two series sharing those N coefficients differ by less than
 * 2^-N <= |q_n|^-2, so they share the convergents through p_n/q_n.
 */

#include <cstddef>
#include <limits>
#include <vector>

#include "algebra.hpp"
#include "laurent.hpp"

namespace lcf {

struct ContinuedFraction {
  Polynomial a0;
  std::vector<Polynomial> partials;  // a1, a2, ...
  std::size_t certified = 0;         // leading partials guaranteed to match the source
  bool exact = false;                // complete expansion of a rational function

  explicit ContinuedFraction(const Field& field) : a0(field) {}
  ContinuedFraction(Polynomial a0_, std::vector<Polynomial> partials_, std::size_t certified_,
                    bool exact_ = false)
      : a0(std::move(a0_)), partials(std::move(partials_)), certified(certified_), exact(exact_) {}

  const Field& field() const noexcept { return a0.field(); }
  std::size_t length() const noexcept { return partials.size(); }
  /// d_1, d_2, ... over all partials.
  std::vector<int> degrees() const;
  /// d_1 .. d_certified.
  std::vector<int> certified_degrees() const;
  ContinuedFraction certified_prefix() const;

  friend bool operator==(const ContinuedFraction&, const ContinuedFraction&) = default;
};

struct Convergent {
  std::size_t n;
  Polynomial p;
  Polynomial q;
  int deg_q() const noexcept { return q.degree(); }
};

/// Exact expansion of num/den; every partial is certified.
ContinuedFraction cf_expand_rational(const Polynomial& num, const Polynomial& den);
inline ContinuedFraction cf_expand_rational(const RationalFunction& r) {
  return cf_expand_rational(r.num(), r.den());
}

/// Certified prefix of a truncated series.  A nonzero polynomial part becomes
/// a0.  Expansion stops once `max_terms` partials are emitted.
ContinuedFraction cf_expand_series(const LaurentSeries& x,
                                   std::size_t max_terms = std::numeric_limits<std::size_t>::max());

/// Rows n = 0..L with p_{-1} = 1, q_{-1} = 0, p_0 = a0, q_0 = 1.
/// Throws Internal if deg q_n != deg q_{n-1} + d_n on some row.
std::vector<Convergent> convergents(const ContinuedFraction& cf);

/// p_L / q_L exactly.
RationalFunction cf_value(const ContinuedFraction& cf);

/// p_L / q_L as a series to the given precision.
LaurentSeries cf_eval(const ContinuedFraction& cf, std::size_t precision);

/// deg(x - p_n/q_n) == -(deg q_n + deg q_{n+1}).  Requires n + 1 <= certified;
/// throws InsufficientPrecision if the difference vanishes to x's precision.
bool approx_error_check(const LaurentSeries& x, const ContinuedFraction& cf, std::size_t n);

/// G = {d_n -> infinity} is not decidable from a prefix.  Exact rational
/// expansions are members outright; everything else is only consistent.
enum class GMembership { Member, ConsistentSoFar };

struct Classification {
  int k;
  bool in_F_k;      // all certified d_n <= k
  bool in_S_k;      // all certified d_n >= k
  bool is_G_prime;  // certified d_n strictly increasing
  GMembership g;
  std::vector<int> degrees;
};

Classification classify(const ContinuedFraction& cf, int k);

}  // namespace lcf
