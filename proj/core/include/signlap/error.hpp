#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace signlap {

/// Error categories raised by the library. Each value corresponds to one
/// failure mode of a public operation.
enum class ErrorCode {
  DuplicateEdge,
  SelfLoop,
  ZeroWeight,
  IndexOutOfRange,
  NonFinite,
  EmptyBlock,
  DimensionMismatch,
  EmptyForest,
  AllPortsOpened,
  AllPortsShorted,
  InvalidPort,
  NoNegativeEdges,
  AlphaTooSmall,
  AlphaNotProper,
  NotApplicable,
  PositivePartDisconnected,
  DisconnectedGraph,
  WrongNegativeEdgeCount,
  NegativeInitialCondition,
  UnbalancedInjections,
  NonpositiveVoltage,
  InvalidTolerance,
  InvalidArgument,
  ParseError,
  RouteDisagreement,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code), detail_(what) {}

  ErrorCode code() const noexcept { return code_; }
  /// Message without the code prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace signlap
