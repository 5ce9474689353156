#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hexagram {

/// Machine-readable failure categories. Every error raised by the library
/// carries exactly one of these.
enum class ErrorCode {
  DivisionByZero,
  MissingAssignment,
  ParseError,
  EmptyCoefficients,
  OrderOutOfRange,
  DegreeMismatch,
  NotDivisible,
  BothZero,
  ZeroForm,
  RoleMismatch,
  CoincidentPoints,
  CoincidentLines,
  InvalidLabels,
  RepeatedParameter,
  DegenerateConfiguration,
  ChartDegenerate,
  DegeneratePencil,
  VanishingPhi,
  RankDeficient,
  Inconsistent,
  ZeroDenominator,
  RoundTripFailed,
  ViewportExcludesAll,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hexagram
