#include "coarsemap/error.hpp"

namespace coarsemap {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NonPositiveEpsilon: return "NonPositiveEpsilon";
    case ErrorCode::SiteSetMismatch: return "SiteSetMismatch";
    case ErrorCode::EpsilonTooSmall: return "EpsilonTooSmall";
    case ErrorCode::EmptyGrid: return "EmptyGrid";
    case ErrorCode::SupportOutOfRange: return "SupportOutOfRange";
    case ErrorCode::OverlappingSupports: return "OverlappingSupports";
    case ErrorCode::SubsetTooLarge: return "SubsetTooLarge";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::NegativeEntry: return "NegativeEntry";
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::AsymmetricInput: return "AsymmetricInput";
    case ErrorCode::InsufficientData: return "InsufficientData";
    case ErrorCode::InsufficientPairs: return "InsufficientPairs";
    case ErrorCode::ZeroValuesInWindow: return "ZeroValuesInWindow";
    case ErrorCode::NoPairsBeyondR0: return "NoPairsBeyondR0";
    case ErrorCode::NonPositiveFunction: return "NonPositiveFunction";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::SpecError: return "SpecError";
    case ErrorCode::NonConvergence: return "NonConvergence";
    case ErrorCode::MaxIterExceeded: return "MaxIterExceeded";
  }
  return "Unknown";
}

ErrorClass classify(ErrorCode code) {
  switch (code) {
    case ErrorCode::NegativeEntry:
    case ErrorCode::NonFinite:
    case ErrorCode::AsymmetricInput:
    case ErrorCode::InsufficientData:
    case ErrorCode::InsufficientPairs:
    case ErrorCode::ZeroValuesInWindow:
    case ErrorCode::NoPairsBeyondR0:
    case ErrorCode::NonPositiveFunction:
    case ErrorCode::ParseError:
    case ErrorCode::SpecError:
    case ErrorCode::CapExceeded:
      return ErrorClass::Data;
    case ErrorCode::NonConvergence:
    case ErrorCode::MaxIterExceeded:
      return ErrorClass::Numeric;
    default:
      return ErrorClass::Usage;
  }
}

}  // namespace coarsemap
