#include "summa/error.hpp"

namespace summa {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::SeedLengthMismatch: return "SeedLengthMismatch";
    case ErrorCode::InsufficientData: return "InsufficientData";
    case ErrorCode::InsufficientCoefficients: return "InsufficientCoefficients";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::RecursionNotVerified: return "RecursionNotVerified";
    case ErrorCode::DegreeZero: return "DegreeZero";
    case ErrorCode::NearPole: return "NearPole";
    case ErrorCode::WeightKindMismatch: return "WeightKindMismatch";
    case ErrorCode::NotAFormalSolution: return "NotAFormalSolution";
    case ErrorCode::DirectionNotSummable: return "DirectionNotSummable";
    case ErrorCode::KernelNonDecaying: return "KernelNonDecaying";
    case ErrorCode::ToleranceNotMet: return "ToleranceNotMet";
    case ErrorCode::ZeroArgument: return "ZeroArgument";
    case ErrorCode::ThetaZeroOnRay: return "ThetaZeroOnRay";
    case ErrorCode::DenominatorHitsRoot: return "DenominatorHitsRoot";
    case ErrorCode::SampleOutsideDomain: return "SampleOutsideDomain";
    case ErrorCode::WindowExceeded: return "WindowExceeded";
    case ErrorCode::SupAtWindowEdge: return "SupAtWindowEdge";
    case ErrorCode::NotYetPositive: return "NotYetPositive";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace summa
