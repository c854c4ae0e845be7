#include "affgrow/error.hpp"

namespace affgrow {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonMonic: return "NonMonic";
    case ErrorCode::EmptyModulus: return "EmptyModulus";
    case ErrorCode::NonIntegerModulus: return "NonIntegerModulus";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::MixedParents: return "MixedParents";
    case ErrorCode::ZeroDivisor: return "ZeroDivisor";
    case ErrorCode::ZeroInput: return "ZeroInput";
    case ErrorCode::FunctionFieldUnsupported: return "FunctionFieldUnsupported";
    case ErrorCode::RequiresField: return "RequiresField";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NotTwoHomotheties: return "NotTwoHomotheties";
    case ErrorCode::EqualFixedPoints: return "EqualFixedPoints";
    case ErrorCode::NotHomothety: return "NotHomothety";
    case ErrorCode::PlaceRingMismatch: return "PlaceRingMismatch";
    case ErrorCode::Precondition: return "Precondition";
    case ErrorCode::MemoryBudget: return "MemoryBudget";
    case ErrorCode::DegreeBudget: return "DegreeBudget";
    case ErrorCode::ZeroConstantTerm: return "ZeroConstantTerm";
    case ErrorCode::InvalidArtifact: return "InvalidArtifact";
  }
  return "Unknown";
}

}  // namespace affgrow
