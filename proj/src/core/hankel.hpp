#pragma once

/**
 * Hankel determinants of a coefficient prefix.
 *
 * D_h(x_1..x_{2h-1}) is the determinant of the h x h matrix with entry
 * (i, j) = x_{i+j-1}; D_0 = 1.  For a series, Delta_h = D_h(x_1..x_{2h-1}) is
 * nonzero exactly when h is the degree of some convergent denominator.
 *
 * D_{h+1} is affine in its last variable with slope D_h, so the constant term
 *   P_h(x_1..x_{2h}) = D_{h+1}(x_1..x_{2h}, 0)
 * is obtained by point evaluation.  Over F_2 the x_{2h}-linear monomials of
 * D_{h+1} cancel in pairs, and
 *   Q_h(x_1..x_{2h-1}) = P_h(x_1..x_{2h-1}, 0).
 * Neither polynomial is ever expanded symbolically.
 */

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "algebra.hpp"

namespace lcf {

/// Determinant of a row-major n x n matrix by Gaussian elimination over F_p.
Residue determinant(const Field& field, std::vector<Residue> matrix, std::size_t n);

/// D_h(coeffs[0..2h-1)).  h = 0 gives 1.  Throws InsufficientCoefficients
/// if fewer than 2h-1 coefficients are supplied.
Residue hankel_delta(const Field& field, std::span<const Residue> coeffs, std::size_t h);

struct DeltaProfile {
  std::size_t prefix_length;
  std::vector<Residue> delta;       // delta[h] for 0 <= h <= floor((N+1)/2); delta[0] = 1
  std::vector<std::size_t> nonzero;  // h >= 1 with delta[h] != 0

  std::size_t max_order() const noexcept { return delta.size() - 1; }
};

/// All Delta_h with 2h-1 <= N, using coeffs[0..N).
DeltaProfile delta_profile(const Field& field, std::span<const Residue> coeffs, std::size_t n);

/// P_h at (x_1..x_{2h}); h >= 1.
Residue p_h_eval(const Field& field, std::span<const Residue> coeffs, std::size_t h);

/// Q_h at (x_1..x_{2h-1}); h >= 1, F_2 only (WrongField otherwise).
Residue q_h_eval(const Field& field, std::span<const Residue> coeffs, std::size_t h);

struct FClassCheck {
  bool ok;
  std::optional<std::size_t> witness;  // first violating h
};

/// Prefix test for membership in F(k): for every k <= h <= floor((N+1)/2),
/// Delta_{h-1} = ... = Delta_{h-k+1} = 0 implies Delta_h != 0.
FClassCheck f_class_check(const Field& field, std::span<const Residue> coeffs, std::size_t n,
                          int k);

}  // namespace lcf
