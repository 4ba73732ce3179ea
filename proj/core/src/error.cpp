#include "signlap/error.hpp"

namespace signlap {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::ZeroWeight: return "ZeroWeight";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::EmptyBlock: return "EmptyBlock";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::EmptyForest: return "EmptyForest";
    case ErrorCode::AllPortsOpened: return "AllPortsOpened";
    case ErrorCode::AllPortsShorted: return "AllPortsShorted";
    case ErrorCode::InvalidPort: return "InvalidPort";
    case ErrorCode::NoNegativeEdges: return "NoNegativeEdges";
    case ErrorCode::AlphaTooSmall: return "AlphaTooSmall";
    case ErrorCode::AlphaNotProper: return "AlphaNotProper";
    case ErrorCode::NotApplicable: return "NotApplicable";
    case ErrorCode::PositivePartDisconnected: return "PositivePartDisconnected";
    case ErrorCode::DisconnectedGraph: return "DisconnectedGraph";
    case ErrorCode::WrongNegativeEdgeCount: return "WrongNegativeEdgeCount";
    case ErrorCode::NegativeInitialCondition: return "NegativeInitialCondition";
    case ErrorCode::UnbalancedInjections: return "UnbalancedInjections";
    case ErrorCode::NonpositiveVoltage: return "NonpositiveVoltage";
    case ErrorCode::InvalidTolerance: return "InvalidTolerance";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::RouteDisagreement: return "RouteDisagreement";
  }
  return "Unknown";
}

}  // namespace signlap
