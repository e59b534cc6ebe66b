#include "random.hpp"

#include <limits>
#include <vector>

namespace lcf {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) noexcept {
  return splitmix64(seed ^ splitmix64(trial));
}

std::uint64_t Rng::uniform(std::uint64_t bound) {
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - (max % bound + 1) % bound;  // largest multiple of bound, minus 1
  std::uint64_t x;
  do {
    x = engine_();
  } while (x > limit);
  return x % bound;
}

std::int64_t Rng::between(std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(uniform(static_cast<std::uint64_t>(hi - lo) + 1));
}

Residue random_residue(const Field& field, Rng& rng) {
  return static_cast<Residue>(rng.uniform(field.characteristic()));
}

Residue random_nonzero_residue(const Field& field, Rng& rng) {
  return static_cast<Residue>(1 + rng.uniform(field.characteristic() - 1));
}

Polynomial random_polynomial(const Field& field, Rng& rng, int degree) {
  std::vector<Residue> c(static_cast<std::size_t>(degree) + 1);
  for (int i = 0; i < degree; ++i) c[static_cast<std::size_t>(i)] = random_residue(field, rng);
  c.back() = random_nonzero_residue(field, rng);
  return Polynomial(field, std::move(c));
}

std::pair<Polynomial, Polynomial> random_proper_rational(const Field& field, Rng& rng,
                                                         int max_den_degree) {
  const int d = static_cast<int>(rng.between(1, max_den_degree));
  Polynomial den = random_polynomial(field, rng, d);
  std::vector<Residue> c(static_cast<std::size_t>(d));
  for (auto& x : c) x = random_residue(field, rng);
  return {Polynomial(field, std::move(c)), std::move(den)};
}

LaurentSeries random_series(const Field& field, Rng& rng, std::size_t precision) {
  std::vector<Residue> frac(precision);
  for (auto& x : frac) x = random_residue(field, rng);
  return LaurentSeries(Polynomial(field), std::move(frac));
}

}  // namespace lcf
