#include "qslice/error.hpp"

namespace qslice {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::RealAxis: return "RealAxis";
    case ErrorCode::OnVinf: return "OnVinf";
    case ErrorCode::OnW: return "OnW";
    case ErrorCode::NotDeck: return "NotDeck";
    case ErrorCode::BadStart: return "BadStart";
    case ErrorCode::PathTooWild: return "PathTooWild";
    case ErrorCode::NotALoop: return "NotALoop";
    case ErrorCode::BadOrder: return "BadOrder";
    case ErrorCode::OutOfDomain: return "OutOfDomain";
    case ErrorCode::DegenerateUnits: return "DegenerateUnits";
    case ErrorCode::DomainMismatch: return "DomainMismatch";
    case ErrorCode::NearBoundary: return "NearBoundary";
    case ErrorCode::VanishingVectorPart: return "VanishingVectorPart";
    case ErrorCode::NonIsolatedZero: return "NonIsolatedZero";
    case ErrorCode::HitsVLocus: return "HitsVLocus";
    case ErrorCode::JNotDefined: return "JNotDefined";
    case ErrorCode::BranchObstruction: return "BranchObstruction";
    case ErrorCode::BadBranchSpec: return "BadBranchSpec";
    case ErrorCode::BadExampleInput: return "BadExampleInput";
    case ErrorCode::DegenerateAngle: return "DegenerateAngle";
    case ErrorCode::NotExponential: return "NotExponential";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace qslice
