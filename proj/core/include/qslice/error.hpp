#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qslice {

/// Failure categories raised by the library. Every throwing operation documents
/// which codes it can produce.
enum class ErrorCode {
  RealAxis,
  OnVinf,
  OnW,
  NotDeck,
  BadStart,
  PathTooWild,
  NotALoop,
  BadOrder,
  OutOfDomain,
  DegenerateUnits,
  DomainMismatch,
  NearBoundary,
  VanishingVectorPart,
  NonIsolatedZero,
  HitsVLocus,
  JNotDefined,
  BranchObstruction,
  BadBranchSpec,
  BadExampleInput,
  DegenerateAngle,
  NotExponential,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace qslice
