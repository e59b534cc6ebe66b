#pragma once

// Seeded property suites.  Trial i draws its input from Rng(trial_seed(seed, i)),
// so any single failing trial can be replayed on its own.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "algebra.hpp"

namespace lcf {

struct FuzzConfig {
  std::string suite;
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  std::optional<std::size_t> precision;  // suite default when unset
  std::optional<int> max_degree;         // suite default when unset
  int k = 1;                             // skm only
  int m = 1;
  std::size_t tail = 1000;               // certification only
  std::size_t max_failures_reported = 20;
};

struct FuzzFailure {
  std::size_t trial;
  std::uint64_t seed;
  std::string input;
  std::string reason;
};

struct FuzzSummary {
  std::string suite;
  std::size_t trials = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::vector<FuzzFailure> failures;  // the first few only
  std::vector<std::pair<std::string, long long>> stats;

  bool ok() const noexcept { return failed == 0; }
};

/// Names accepted by run_fuzz.
const std::vector<std::string>& fuzz_suites();

/// Throws InvalidArgument for an unknown suite, WrongField when the suite is
/// tied to F_2 ("lemma").
FuzzSummary run_fuzz(const Field& field, const FuzzConfig& config);

struct LemmaReport {
  std::size_t max_h;
  std::size_t points = 0;
  std::size_t affine_failures = 0;     // D_{h+1} = x_{2h+1} D_h + P_h
  std::size_t quadratic_failures = 0;  // P_h = x_{2h}^2 D_{h-1} + Q_h
  bool ok() const noexcept { return affine_failures == 0 && quadratic_failures == 0; }
};

/// Both expansion identities for the Hankel determinant, on every point of
/// F_2^(2h+1) for h = 1..max_h.
LemmaReport lemma_exhaustive_f2(std::size_t max_h);

/// a0, a1, ... of num/den by plain Euclidean division: `count` terms in
/// total, fewer if the expansion ends first.
std::vector<Polynomial> euclid_partials(Polynomial num, Polynomial den, std::size_t count);

}  // namespace lcf
