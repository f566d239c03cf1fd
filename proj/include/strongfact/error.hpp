#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace strongfact {

enum class ErrorCode {
  InvalidArgument,
  LengthMismatch,
  DomainMismatch,
  IndexOutOfRange,
  SizeMismatch,
  ZeroPivot,
  AllZeroMultiplier,
  ZeroDiagonal,
  ExponentRange,
  DegenerateExponent,
  NotWeightedFamily,
  ParseError,
  SpecError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every recoverable failure in the library is reported with one of these.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace strongfact
