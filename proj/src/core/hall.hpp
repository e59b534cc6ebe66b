#pragma once

/**
 * Coefficientwise decompositions alpha = beta + gamma with bounded partial
 * quotients.
 *
 * Generic mode (|K| >= 3): beta, gamma in F(1), i.e. every Hankel
 * determinant of both parts is nonzero.  Coefficient 2n+1 of beta avoids the
 * two values that would make D_{n+1}(beta) or D_{n+1}(gamma) vanish; since
 * D_{n+1} = x_{2n+1} D_n + P_n, those values are -P_n(beta)/D_n(beta) and
 * alpha_{2n+1} + P_n(gamma)/D_n(gamma).
 *
 * F_2 mode: gamma in F(1) and beta in F(2), i.e. beta never has two
 * consecutive vanishing Hankel determinants.  When D_n(beta) = 0 the even
 * coefficient beta_{2n} is forced away from Q_n(beta)/D_{n-1}(beta).
 *
 * Both constructions consume alpha one coefficient at a time, so extending
 * the input never changes an already produced prefix.
 */

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "hankel.hpp"
#include "laurent.hpp"
#include "random.hpp"

namespace lcf {

/// Resolves the free choices.  The default takes the smallest admissible
/// residue; the seeded variant draws uniformly among admissible residues.
class Chooser {
 public:
  static Chooser smallest() { return Chooser(std::nullopt); }
  static Chooser seeded(std::uint64_t seed) { return Chooser(Rng(seed)); }

  /// Throws Internal if `forbidden` covers the whole field.
  Residue pick(const Field& field, std::span<const Residue> forbidden);

 private:
  explicit Chooser(std::optional<Rng> rng) : rng_(std::move(rng)) {}
  std::optional<Rng> rng_;
};

enum class HallMode { Generic, F2 };

const char* to_string(HallMode mode) noexcept;

/// One record per Hankel order n: the coefficients at indices 2n-2 (the
/// "free" even slot, absent for n = 1) and 2n-1, and the resulting D_n of
/// both parts.  A trailing record may hold only its even slot.
struct HallStep {
  std::size_t n = 0;
  std::optional<Residue> beta_free;
  std::optional<Residue> gamma_free;
  std::vector<Residue> forbidden_free;  // F_2 case1: values barred for beta_{2n-2}
  std::vector<Residue> forbidden;       // barred for the odd slot: beta (generic) or gamma (F_2)
  std::optional<Residue> beta;
  std::optional<Residue> gamma;
  std::optional<Residue> delta_beta;
  std::optional<Residue> delta_gamma;
  std::string branch;  // "generic" or "case1"
};

/// Incremental decomposition state; single owner, fed one alpha coefficient
/// at a time.
class HallState {
 public:
  /// Throws FieldTooSmall for generic mode over F_2 and WrongField for F_2
  /// mode over any other field.
  HallState(const Field& field, HallMode mode, Chooser chooser = Chooser::smallest());

  void feed(Residue alpha_i);

  const Field& field() const noexcept { return field_; }
  HallMode mode() const noexcept { return mode_; }
  std::size_t consumed() const noexcept { return beta_.size(); }
  std::span<const Residue> beta() const noexcept { return beta_; }
  std::span<const Residue> gamma() const noexcept { return gamma_; }
  const std::vector<HallStep>& steps() const noexcept { return steps_; }

 private:
  void feed_first(Residue alpha_1);
  void feed_even(Residue alpha_i);
  void feed_odd(Residue alpha_i);

  Field field_;
  HallMode mode_;
  Chooser chooser_;
  std::vector<Residue> beta_;
  std::vector<Residue> gamma_;
  std::vector<Residue> delta_beta_{1};   // D_h(beta), h = 0..n
  std::vector<Residue> delta_gamma_{1};  // D_h(gamma), h = 0..n
  std::vector<HallStep> steps_;
};

struct HallResult {
  HallMode mode;
  LaurentSeries beta;
  LaurentSeries gamma;
  std::vector<HallStep> steps;
};

/// Generic mode.  A nonzero polynomial part of alpha is assigned to beta.
HallResult hall_decompose(const LaurentSeries& alpha, Chooser chooser = Chooser::smallest());
/// F_2 mode.  A nonzero polynomial part of alpha is assigned to beta.
HallResult hall_decompose_f2(const LaurentSeries& alpha, Chooser chooser = Chooser::smallest());

struct DecompositionReport {
  HallMode mode;
  std::size_t precision;
  bool sum_ok = false;
  std::optional<std::size_t> sum_mismatch;  // first fractional index with beta+gamma != alpha
  int beta_k = 1;
  int gamma_k = 1;
  FClassCheck beta_check{false, std::nullopt};
  FClassCheck gamma_check{false, std::nullopt};
  std::vector<std::size_t> beta_delta_nonzero;
  std::vector<std::size_t> gamma_delta_nonzero;
  std::vector<int> beta_cf_degrees;   // certified partial-quotient degrees
  std::vector<int> gamma_cf_degrees;
  bool beta_cf_ok = false;            // certified degrees all <= beta_k
  bool gamma_cf_ok = false;

  bool passed() const noexcept {
    return sum_ok && beta_check.ok && gamma_check.ok && beta_cf_ok && gamma_cf_ok;
  }
};

/// Checks beta + gamma = alpha, the Hankel criterion for F(k) on both parts
/// (k = 1, 1 in generic mode; k = 2 for beta and 1 for gamma in F_2 mode),
/// and that the certified partial quotients of both parts have degree <= k.
DecompositionReport hall_verify(const LaurentSeries& alpha, const LaurentSeries& beta,
                                const LaurentSeries& gamma, HallMode mode);

struct CounterexampleBranch {
  Residue beta1;
  Residue gamma1;
  char zero_part;              // 'b' or 'g': the part whose first coefficient is 0
  std::size_t refuted_at_h;    // Hankel order where F(1) fails
};

struct CounterexampleReport {
  std::vector<CounterexampleBranch> branches;
  bool all_refuted = false;
};

/// Over F_2, alpha = t^-1: every split of alpha_1 = 1 has a part with first
/// coefficient 0, so that part has Delta_1 = 0 and is not in F(1).
CounterexampleReport f1_counterexample_f2();

}  // namespace lcf
