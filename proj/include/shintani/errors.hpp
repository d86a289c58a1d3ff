#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace shintani {

enum class ErrorCode {
  invalid_argument,
  division_by_zero,
  general_position_violation,
  singular_basis,
  singular_matrix,
  zero_vector,
  case_decomposition_failure,
  unsupported_dimension,
  all_forms_zero,
  zero_form,
  constant_against_non_vanishing,
  not_divisible,
  truncation_too_small,
  not_square_free,
  narrow_class_number_not_one,
  not_invertible,
  ring_mismatch,
  internal,
};

constexpr std::string_view error_code_name(ErrorCode c) noexcept {
  switch (c) {
    case ErrorCode::invalid_argument: return "InvalidArgument";
    case ErrorCode::division_by_zero: return "DivisionByZero";
    case ErrorCode::general_position_violation: return "GeneralPositionViolation";
    case ErrorCode::singular_basis: return "SingularBasis";
    case ErrorCode::singular_matrix: return "SingularMatrix";
    case ErrorCode::zero_vector: return "ZeroVector";
    case ErrorCode::case_decomposition_failure: return "CaseDecompositionFailure";
    case ErrorCode::unsupported_dimension: return "UnsupportedDimension";
    case ErrorCode::all_forms_zero: return "AllFormsZero";
    case ErrorCode::zero_form: return "ZeroForm";
    case ErrorCode::constant_against_non_vanishing: return "ConstantAgainstNonVanishing";
    case ErrorCode::not_divisible: return "NotDivisible";
    case ErrorCode::truncation_too_small: return "TruncationTooSmall";
    case ErrorCode::not_square_free: return "NotSquareFree";
    case ErrorCode::narrow_class_number_not_one: return "NarrowClassNumberNotOne";
    case ErrorCode::not_invertible: return "NotInvertible";
    case ErrorCode::ring_mismatch: return "RingMismatch";
    case ErrorCode::internal: return "Internal";
  }
  return "Unknown";
}

/// Every failure raised by the library. `context()` names the object involved
/// (a cone, a linear form, a matrix) so that callers can report it verbatim.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::string context = {})
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code),
        message_(message),
        context_(std::move(context)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& message() const noexcept { return message_; }
  const std::string& context() const noexcept { return context_; }

 private:
  ErrorCode code_;
  std::string message_;
  std::string context_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message, std::string context = {}) {
  throw Error(code, message, std::move(context));
}

}  // namespace shintani
