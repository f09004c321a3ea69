#include "jacobi/error.hpp"

namespace jacobi {

std::string_view to_string(ErrorCode code) {
  switch (code) {
  case ErrorCode::DivisionByZero: return "DivisionByZero";
  case ErrorCode::FieldMismatch: return "FieldMismatch";
  case ErrorCode::InvalidField: return "InvalidField";
  case ErrorCode::ParseError: return "ParseError";
  case ErrorCode::ArityMismatch: return "ArityMismatch";
  case ErrorCode::RingMismatch: return "RingMismatch";
  case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
  case ErrorCode::EmptyInput: return "EmptyInput";
  case ErrorCode::MissingUserInput: return "MissingUserInput";
  case ErrorCode::DuplicateLambda: return "DuplicateLambda";
  case ErrorCode::NonConvergence: return "NonConvergence";
  case ErrorCode::InvalidConfig: return "InvalidConfig";
  case ErrorCode::TopClassInvalid: return "TopClassInvalid";
  case ErrorCode::UnexpectedDimensions: return "UnexpectedDimensions";
  case ErrorCode::ResidueOffBasis: return "ResidueOffBasis";
  case ErrorCode::DimensionMismatch: return "DimensionMismatch";
  case ErrorCode::GradingViolation: return "GradingViolation";
  case ErrorCode::IdealIsUnit: return "IdealIsUnit";
  case ErrorCode::BudgetExceeded: return "BudgetExceeded";
  case ErrorCode::DegenerateMatrix: return "DegenerateMatrix";
  }
  return "Unknown";
}

} // namespace jacobi
