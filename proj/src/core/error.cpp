#include "error.hpp"

namespace lcf {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ZeroInverse: return "ZeroInverse";
    case ErrorCode::DivisionByZeroPolynomial: return "DivisionByZeroPolynomial";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::ZeroSeries: return "ZeroSeries";
    case ErrorCode::InsufficientPrecision: return "InsufficientPrecision";
    case ErrorCode::InsufficientCoefficients: return "InsufficientCoefficients";
    case ErrorCode::WrongField: return "WrongField";
    case ErrorCode::FieldTooSmall: return "FieldTooSmall";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace lcf
