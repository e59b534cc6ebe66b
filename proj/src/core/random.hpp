#pragma once

// Seeded, portable randomness.  Engine: std::mt19937_64 (its output sequence
// is fixed by the standard).  Bounded draws use rejection sampling on the raw
// 64-bit output rather than std::uniform_int_distribution, whose algorithm is
// implementation-defined.  Per-trial seeds are splitmix64(seed ^ splitmix64(i)).

#include <cstdint>
#include <random>
#include <utility>

#include "algebra.hpp"
#include "laurent.hpp"

namespace lcf {

std::uint64_t splitmix64(std::uint64_t x) noexcept;
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) noexcept;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, bound); bound > 0.
  std::uint64_t uniform(std::uint64_t bound);
  /// Uniform in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi);

 private:
  std::mt19937_64 engine_;
};

Residue random_residue(const Field& field, Rng& rng);
Residue random_nonzero_residue(const Field& field, Rng& rng);
/// Uniform coefficients with a nonzero leading coefficient; degree >= 0.
Polynomial random_polynomial(const Field& field, Rng& rng, int degree);
/// den of degree uniform in [1, max_den_degree], num uniform of degree < deg den
/// (possibly zero).  Not reduced to lowest terms.
std::pair<Polynomial, Polynomial> random_proper_rational(const Field& field, Rng& rng,
                                                         int max_den_degree);
/// Zero polynomial part, i.i.d. uniform fractional coefficients.
LaurentSeries random_series(const Field& field, Rng& rng, std::size_t precision);

}  // namespace lcf
