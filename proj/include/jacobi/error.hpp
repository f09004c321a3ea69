#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace jacobi {

enum class ErrorCode {
  DivisionByZero,
  FieldMismatch,
  InvalidField,
  ParseError,
  ArityMismatch,
  RingMismatch,
  IndexOutOfRange,
  EmptyInput,
  MissingUserInput,
  DuplicateLambda,
  NonConvergence,
  InvalidConfig,
  TopClassInvalid,
  UnexpectedDimensions,
  ResidueOffBasis,
  DimensionMismatch,
  GradingViolation,
  IdealIsUnit,
  BudgetExceeded,
  DegenerateMatrix,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library. `code()` identifies the failure
/// class; `what()` carries a human-readable message.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string &message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code), message_(message) {}

  ErrorCode code() const noexcept { return code_; }
  /// The message without the code prefix.
  const std::string &message() const noexcept { return message_; }

private:
  ErrorCode code_;
  std::string message_;
};

} // namespace jacobi
