#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace summa {

enum class ErrorCode {
  IndexOutOfRange,
  SeedLengthMismatch,
  InsufficientData,
  InsufficientCoefficients,
  EmptyInput,
  RecursionNotVerified,
  DegreeZero,
  NearPole,
  WeightKindMismatch,
  NotAFormalSolution,
  DirectionNotSummable,
  KernelNonDecaying,
  ToleranceNotMet,
  ZeroArgument,
  ThetaZeroOnRay,
  DenominatorHitsRoot,
  SampleOutsideDomain,
  WindowExceeded,
  SupAtWindowEdge,
  NotYetPositive,
  DivisionByZero,
  InvalidArgument,
  Unsupported,
  ParseError,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace summa
