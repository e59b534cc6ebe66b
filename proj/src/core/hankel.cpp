#include "hankel.hpp"

#include <string>
#include <utility>

namespace lcf {
namespace {

void require_coeffs(std::span<const Residue> coeffs, std::size_t needed) {
  if (coeffs.size() < needed) {
    throw Error(ErrorCode::InsufficientCoefficients,
                "need " + std::to_string(needed) + " coefficients, have " +
                    std::to_string(coeffs.size()));
  }
}

Residue hankel_unchecked(const Field& field, std::span<const Residue> coeffs, std::size_t h) {
  if (h == 0) return 1;
  std::vector<Residue> m(h * h);
  for (std::size_t i = 0; i < h; ++i) {
    for (std::size_t j = 0; j < h; ++j) m[i * h + j] = coeffs[i + j];
  }
  return determinant(field, std::move(m), h);
}

}  // namespace

Residue determinant(const Field& field, std::vector<Residue> m, std::size_t n) {
  Residue det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot * n + col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      for (std::size_t j = col; j < n; ++j) std::swap(m[pivot * n + j], m[col * n + j]);
      det = field.neg(det);
    }
    const Residue piv = m[col * n + col];
    det = field.mul(det, piv);
    const Residue piv_inv = field.inv(piv);
    for (std::size_t i = col + 1; i < n; ++i) {
      const Residue factor = field.mul(m[i * n + col], piv_inv);
      if (factor == 0) continue;
      for (std::size_t j = col; j < n; ++j) {
        m[i * n + j] = field.sub(m[i * n + j], field.mul(factor, m[col * n + j]));
      }
    }
  }
  return det;
}

Residue hankel_delta(const Field& field, std::span<const Residue> coeffs, std::size_t h) {
  if (h > 0) require_coeffs(coeffs, 2 * h - 1);
  return hankel_unchecked(field, coeffs, h);
}

DeltaProfile delta_profile(const Field& field, std::span<const Residue> coeffs, std::size_t n) {
  require_coeffs(coeffs, n);
  DeltaProfile profile{n, {1}, {}};
  const std::size_t hmax = (n + 1) / 2;
  for (std::size_t h = 1; h <= hmax; ++h) {
    const Residue d = hankel_unchecked(field, coeffs, h);
    profile.delta.push_back(d);
    if (d != 0) profile.nonzero.push_back(h);
  }
  return profile;
}

Residue p_h_eval(const Field& field, std::span<const Residue> coeffs, std::size_t h) {
  if (h == 0) throw Error(ErrorCode::InvalidArgument, "P_h is defined for h >= 1");
  require_coeffs(coeffs, 2 * h);
  std::vector<Residue> point(coeffs.begin(), coeffs.begin() + 2 * h);
  point.push_back(0);
  return hankel_unchecked(field, point, h + 1);
}

Residue q_h_eval(const Field& field, std::span<const Residue> coeffs, std::size_t h) {
  if (field.characteristic() != 2) {
    throw Error(ErrorCode::WrongField, "Q_h is only defined over F_2");
  }
  if (h == 0) throw Error(ErrorCode::InvalidArgument, "Q_h is defined for h >= 1");
  require_coeffs(coeffs, 2 * h - 1);
  std::vector<Residue> point(coeffs.begin(), coeffs.begin() + (2 * h - 1));
  point.push_back(0);
  return p_h_eval(field, point, h);
}

FClassCheck f_class_check(const Field& field, std::span<const Residue> coeffs, std::size_t n,
                          int k) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "F(k) needs k >= 1");
  const DeltaProfile profile = delta_profile(field, coeffs, n);
  const auto kk = static_cast<std::size_t>(k);
  for (std::size_t h = kk; h <= profile.max_order(); ++h) {
    bool gap_before = true;
    for (std::size_t i = 1; i < kk; ++i) {
      if (profile.delta[h - i] != 0) {
        gap_before = false;
        break;
      }
    }
    if (gap_before && profile.delta[h] == 0) return {false, h};
  }
  return {true, std::nullopt};
}

}  // namespace lcf
