#pragma once

// Text syntax shared by the CLI and the C API.
//
//   polynomial  terms c*t^k joined by + (or -); '*' optional, "t" is t^1, a
//               bare integer is a constant; integers are reduced mod p.
//               e.g. "2t^3+t+1"
//   rational    num/den, either side optionally parenthesised.
//               e.g. "t/(t^2+1)"
//   series      "poly ; c1 c2 ... cN @N"  e.g. "0 ; 1 0 2 0 1 0 @6"
//   cf          "[a0; a1, a2, ...]"       e.g. "[0; t, t^2+1, 2t]"

#include <string>
#include <string_view>
#include <utility>

#include "algebra.hpp"
#include "contfrac.hpp"
#include "laurent.hpp"

namespace lcf {

Polynomial parse_polynomial(const Field& field, std::string_view text);
std::pair<Polynomial, Polynomial> parse_rational(const Field& field, std::string_view text);
LaurentSeries parse_series(const Field& field, std::string_view text);
ContinuedFraction parse_cf(const Field& field, std::string_view text);

std::string format_polynomial(const Polynomial& p);
std::string format_series(const LaurentSeries& x);
/// Partials past `certified` are not printed.
std::string format_cf(const ContinuedFraction& cf);

}  // namespace lcf
