#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace treewalk {

enum class ErrorCode {
  CycleDetected,
  Disconnected,
  DuplicateEdge,
  SelfLoop,
  VertexOutOfRange,
  SplitAtLeaf,
  EntryOutOfRange,
  CapExceeded,
  InvalidFamilyParameters,
  ParityMismatch,
  OutOfStatedRange,
  NotALeaf,
  WrongNeighbor,
  SelfAttach,
  DiameterOutOfRange,
  EquivalenceViolated,
  ParseError,
  UnknownClaim,
  TreeTooSmall,
  InvariantViolated,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::CycleDetected: return "CycleDetected";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::SplitAtLeaf: return "SplitAtLeaf";
    case ErrorCode::EntryOutOfRange: return "EntryOutOfRange";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::InvalidFamilyParameters: return "InvalidFamilyParameters";
    case ErrorCode::ParityMismatch: return "ParityMismatch";
    case ErrorCode::OutOfStatedRange: return "OutOfStatedRange";
    case ErrorCode::NotALeaf: return "NotALeaf";
    case ErrorCode::WrongNeighbor: return "WrongNeighbor";
    case ErrorCode::SelfAttach: return "SelfAttach";
    case ErrorCode::DiameterOutOfRange: return "DiameterOutOfRange";
    case ErrorCode::EquivalenceViolated: return "EquivalenceViolated";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnknownClaim: return "UnknownClaim";
    case ErrorCode::TreeTooSmall: return "TreeTooSmall";
    case ErrorCode::InvariantViolated: return "InvariantViolated";
  }
  return "Unknown";
}

/// Every failure raised by the library carries a machine-readable code; the
/// message names the offending input (edge, vertex, parameter, line).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace treewalk
