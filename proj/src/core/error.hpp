#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lcf {

enum class ErrorCode {
  InvalidArgument = 1,
  ZeroInverse,
  DivisionByZeroPolynomial,
  FieldMismatch,
  ZeroSeries,
  InsufficientPrecision,
  InsufficientCoefficients,
  WrongField,
  FieldTooSmall,
  PreconditionViolated,
  ParseError,
  Internal,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised by the text parsers; `position()` is a 0-based byte offset into the input.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : Error(ErrorCode::ParseError,
              message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace lcf
