#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace chainproj {

enum class ErrorCode {
  DuplicateEvent,
  UnknownEvent,
  CycleViolation,
  FrozenPoset,
  NotFrozen,
  InvalidChain,
  UnknownChain,
  InvalidMetric,
  EmptyWorldline,
  Unquantifiable,
  NotBetween,
  MissingProjection,
  IdenticalChains,
  InconsistentSides,
  NotCollinear,
  NotCoordinated,
  NonUniformSpacing,
  TooFewChains,
  SpacingMismatch,
  TimeMismatch,
  NotAntichainLike,
  AlignmentError,
  MixedConfiguration,
  NotParallel,
  NotOrthogonal,
  NotOnGrid,
  BadParams,
  ParseError,
  IoError,
  UnknownSuite,
  UnknownFormat,
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

}  // namespace chainproj
