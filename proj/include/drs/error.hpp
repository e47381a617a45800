#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace drs {

enum class ErrorCode {
  InvalidField,
  ZeroInverse,
  ZeroLog,
  ZeroScale,
  VanishesAtPivot,
  DegreeTooHigh,
  DimensionMismatch,
  Singular,
  IndexOutOfRange,
  LengthMismatch,
  InvalidCode,
  OracleTooLarge,
  InvalidTopology,
  TooManySources,
  NotInCapacityRegion,
  InvalidPlan,
  CaseClassificationFailure,
  DegreeBoundViolation,
  RankDeficient,
  MaskViolation,
  DuplicatePosition,
  ZeroErrorValue,
  Parse,
  Io,
};

std::string_view to_string(ErrorCode code);

// Single exception type for the library; callers branch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace drs
