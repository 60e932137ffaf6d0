#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nsdeg {

enum class ErrorCode {
  EmptyGenerators,
  GcdNotOne,
  Overflow,
  NotMember,
  FullSemigroup,
  AmbientMismatch,
  NotContained,
  InternalInvariantViolation,
  NotThreeGenerated,
  SymmetricSemigroup,
  NoValidOrientation,
  AmbiguousDecomposition,
  TooLarge,
  CapExceeded,
  InvalidGapSet,
  NonPositiveGenerator,
  NotAnIdeal,
};

constexpr std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyGenerators: return "EmptyGenerators";
    case ErrorCode::GcdNotOne: return "GcdNotOne";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::NotMember: return "NotMember";
    case ErrorCode::FullSemigroup: return "FullSemigroup";
    case ErrorCode::AmbientMismatch: return "AmbientMismatch";
    case ErrorCode::NotContained: return "NotContained";
    case ErrorCode::InternalInvariantViolation: return "InternalInvariantViolation";
    case ErrorCode::NotThreeGenerated: return "NotThreeGenerated";
    case ErrorCode::SymmetricSemigroup: return "SymmetricSemigroup";
    case ErrorCode::NoValidOrientation: return "NoValidOrientation";
    case ErrorCode::AmbiguousDecomposition: return "AmbiguousDecomposition";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::InvalidGapSet: return "InvalidGapSet";
    case ErrorCode::NonPositiveGenerator: return "NonPositiveGenerator";
    case ErrorCode::NotAnIdeal: return "NotAnIdeal";
  }
  return "Unknown";
}

/// Every failure raised by the library. The message always starts with the
/// error name so CLI diagnostics can be matched verbatim.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(error_name(code)) + (detail.empty() ? "" : ": " + detail)),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  std::string_view name() const noexcept { return error_name(code_); }

 private:
  ErrorCode code_;
};

}  // namespace nsdeg
