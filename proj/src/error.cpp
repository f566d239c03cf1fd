#include "strongfact/error.hpp"

namespace strongfact {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::DomainMismatch: return "DomainMismatch";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::ZeroPivot: return "ZeroPivot";
    case ErrorCode::AllZeroMultiplier: return "AllZeroMultiplier";
    case ErrorCode::ZeroDiagonal: return "ZeroDiagonal";
    case ErrorCode::ExponentRange: return "ExponentRange";
    case ErrorCode::DegenerateExponent: return "DegenerateExponent";
    case ErrorCode::NotWeightedFamily: return "NotWeightedFamily";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::SpecError: return "SpecError";
  }
  return "Unknown";
}

}  // namespace strongfact
