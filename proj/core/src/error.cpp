#include "atplanar/error.hpp"

namespace atplanar {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DuplicateVertex: return "DuplicateVertex";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::RotationMismatch: return "RotationMismatch";
    case ErrorCode::EulerViolation: return "EulerViolation";
    case ErrorCode::InvalidEmbedding: return "InvalidEmbedding";
    case ErrorCode::NotNearTriangulation: return "NotNearTriangulation";
    case ErrorCode::ChordPresent: return "ChordPresent";
    case ErrorCode::HandleNotOnBoundary: return "HandleNotOnBoundary";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::ParityCapExceeded: return "ParityCapExceeded";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::BadSelector: return "BadSelector";
    case ErrorCode::BadParameters: return "BadParameters";
    case ErrorCode::InvalidArc: return "InvalidArc";
    case ErrorCode::InvalidStarForest: return "InvalidStarForest";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace atplanar
