#include "hexagram/error.hpp"

namespace hexagram {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::MissingAssignment: return "MissingAssignment";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::EmptyCoefficients: return "EmptyCoefficients";
    case ErrorCode::OrderOutOfRange: return "OrderOutOfRange";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::BothZero: return "BothZero";
    case ErrorCode::ZeroForm: return "ZeroForm";
    case ErrorCode::RoleMismatch: return "RoleMismatch";
    case ErrorCode::CoincidentPoints: return "CoincidentPoints";
    case ErrorCode::CoincidentLines: return "CoincidentLines";
    case ErrorCode::InvalidLabels: return "InvalidLabels";
    case ErrorCode::RepeatedParameter: return "RepeatedParameter";
    case ErrorCode::DegenerateConfiguration: return "DegenerateConfiguration";
    case ErrorCode::ChartDegenerate: return "ChartDegenerate";
    case ErrorCode::DegeneratePencil: return "DegeneratePencil";
    case ErrorCode::VanishingPhi: return "VanishingPhi";
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::Inconsistent: return "Inconsistent";
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::RoundTripFailed: return "RoundTripFailed";
    case ErrorCode::ViewportExcludesAll: return "ViewportExcludesAll";
  }
  return "Unknown";
}

}  // namespace hexagram
