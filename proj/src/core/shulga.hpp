#pragma once

/**
 * Alternating greedy decomposition alpha = beta + gamma into two continued
 * fractions with rapidly growing partial-quotient degrees.
 *
 * With p_n/q_n = [0; b_1..b_n] and s_n/t_n = [0; c_1..c_n]:
 *   b_{n+1} = a_{n+1}(alpha - s_n/t_n),   c_{n+1} = a_{n+1}(alpha - p_{n+1}/q_{n+1}),
 * stopping as soon as alpha equals the current sum.  Every trace satisfies
 *   deg c_1 >= 2 deg b_1 + 1,  deg b_n >= deg c_{n-1} + 2,  deg c_n >= deg b_n + 2,
 * which follow from the interlacing
 *   deg t_{j-1} - deg q_{j-1} < deg q_j - deg t_{j-1} < deg t_j - deg q_j.
 */

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "contfrac.hpp"
#include "laurent.hpp"

namespace lcf {

inline constexpr std::size_t kDefaultMaxRounds = 10000;

enum class StopReason { ExactSumAfterB, ExactSumAfterC, PrecisionExhausted, MaxRounds };

const char* to_string(StopReason reason) noexcept;

struct ShulgaTrace {
  std::vector<Polynomial> b;
  std::vector<Polynomial> c;  // c.size() is b.size() or b.size() - 1
  StopReason stop = StopReason::ExactSumAfterC;

  /// Completed (b, c) pairs.  A trailing b without its c is not counted.
  std::size_t rounds() const noexcept { return c.size(); }
  /// deg q_j for j = 0..b.size() (deg q_0 = 0).
  std::vector<int> deg_q() const;
  /// deg t_j for j = 0..c.size() (deg t_0 = 0).
  std::vector<int> deg_t() const;
};

struct ShulgaResult {
  ContinuedFraction beta;   // [0; b_1, ...]
  ContinuedFraction gamma;  // [0; c_1, ...]
  ShulgaTrace trace;
  std::vector<Convergent> beta_convergents;   // (p_n, q_n)
  std::vector<Convergent> gamma_convergents;  // (s_n, t_n)
};

/// Exact run on num/den with deg num < deg den (PreconditionViolated otherwise).
ShulgaResult shulga_decompose_rational(const Polynomial& num, const Polynomial& den,
                                       std::size_t max_rounds = kDefaultMaxRounds);

/// Run on a truncated series with zero polynomial part.  Each partial quotient
/// is emitted only if it is certified for the series difference it is read
/// from; the first uncertified one ends the run with PrecisionExhausted.
ShulgaResult shulga_decompose_series(const LaurentSeries& alpha,
                                     std::size_t max_rounds = kDefaultMaxRounds);

struct GapViolation {
  std::string rule;
  std::size_t index;
  int lhs;
  int rhs;  // the violated relation is lhs >= rhs (or lhs < rhs for interlacing)
};

struct InterlacingSides {
  std::size_t j;
  int left;
  int right;
};

struct GapReport {
  std::vector<GapViolation> violations;
  /// deg t_{j-1} - deg q_{j-1}  vs  deg q_j - deg t_{j-1}, for every defined b_j.
  std::vector<InterlacingSides> b_sides;
  /// deg q_j - deg t_{j-1}  vs  deg t_j - deg q_j, for every defined c_j.
  std::vector<InterlacingSides> c_sides;

  bool ok() const noexcept { return violations.empty(); }
};

GapReport shulga_verify_gaps(const ShulgaTrace& trace);

/// Re-expands the differences alpha - [0; c_1..c_n] and alpha - [0; b_1..b_n]
/// and checks they start with b_1..b_n and c_1..c_{n-1} (or c_1..c_n once c_n
/// exists).
struct WellDefinedReport {
  bool ok = true;
  std::optional<std::size_t> first_failure;  // round n
  std::size_t unverifiable = 0;              // series checks lacking certified terms
};

WellDefinedReport shulga_verify_well_defined(const RationalFunction& alpha,
                                             const ShulgaTrace& trace);
WellDefinedReport shulga_verify_well_defined(const LaurentSeries& alpha, const ShulgaTrace& trace);

struct SkmReport {
  int k;
  int m;
  /// alpha_n must vanish for 1 <= n < max{k, (m-1)/2}, read as a real bound.
  std::size_t required_zeros;
  ShulgaResult result;
  Classification beta_class;   // against k
  Classification gamma_class;  // against m
  GapReport gaps;

  bool passed() const noexcept {
    return beta_class.in_S_k && gamma_class.in_S_k && beta_class.is_G_prime &&
           gamma_class.is_G_prime && gaps.ok();
  }
};

/// Number of leading fractional coefficients that must vanish.
std::size_t skm_required_zeros(int k, int m);

/// Runs the series decomposition and checks beta in S(k), gamma in S(m) on
/// the certified quotients.  A polynomial part of alpha goes to beta's a0.
/// Throws PreconditionViolated if a required leading coefficient is nonzero.
SkmReport skm_check(const LaurentSeries& alpha, int k, int m);

struct CanonicalExample {
  LaurentSeries alpha;
  std::vector<Polynomial> expected_b;  // t^(4i-3)
  std::vector<Polynomial> expected_c;  // t^(4i-1)
};

/// deg q_{n+1} + deg t_n = (n+1)(2n+1) + n(2n+1) = (2n+1)^2.
std::size_t canonical_required_precision(std::size_t rounds) noexcept;

/// alpha = [0; t, t^5, ..., t^(4n-3)] + [0; t^3, t^7, ..., t^(4n-1)] to precision N.
/// Throws InsufficientPrecision when N < canonical_required_precision(n).
CanonicalExample canonical_example(const Field& field, std::size_t rounds, std::size_t precision);

}  // namespace lcf
