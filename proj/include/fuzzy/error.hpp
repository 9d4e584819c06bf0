#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fuzzy {

enum class ErrorCode {
  EmptyGraph,
  ZeroSigmaVertex,
  DuplicateVertex,
  DuplicateEdge,
  SelfLoop,
  UnknownEndpoint,
  MembershipBound,
  ValueRange,
  ReservedCharacter,
  InvalidVertexId,
  EmptySelection,
  UnknownVertex,
  BadParameter,
  VertexCollision,
  TooLarge,
  BadProfile,
  UnknownProperty,
  ProfileMismatch,
  UnknownClaim,
  SyntaxError,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyGraph: return "EmptyGraph";
    case ErrorCode::ZeroSigmaVertex: return "ZeroSigmaVertex";
    case ErrorCode::DuplicateVertex: return "DuplicateVertex";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::UnknownEndpoint: return "UnknownEndpoint";
    case ErrorCode::MembershipBound: return "MembershipBound";
    case ErrorCode::ValueRange: return "ValueRange";
    case ErrorCode::ReservedCharacter: return "ReservedCharacter";
    case ErrorCode::InvalidVertexId: return "InvalidVertexId";
    case ErrorCode::EmptySelection: return "EmptySelection";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::BadParameter: return "BadParameter";
    case ErrorCode::VertexCollision: return "VertexCollision";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::BadProfile: return "BadProfile";
    case ErrorCode::UnknownProperty: return "UnknownProperty";
    case ErrorCode::ProfileMismatch: return "ProfileMismatch";
    case ErrorCode::UnknownClaim: return "UnknownClaim";
    case ErrorCode::SyntaxError: return "SyntaxError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above; the
/// message is prefixed with the code name so CLI output stays greppable.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code), detail_(detail) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace fuzzy
