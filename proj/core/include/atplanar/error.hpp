#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace atplanar {

enum class ErrorCode {
  DuplicateVertex,
  DuplicateEdge,
  SelfLoop,
  UnknownVertex,
  RotationMismatch,
  EulerViolation,
  InvalidEmbedding,
  NotNearTriangulation,
  ChordPresent,
  HandleNotOnBoundary,
  Disconnected,
  PreconditionViolated,
  ParityCapExceeded,
  CapExceeded,
  DegreeMismatch,
  Overflow,
  BadSelector,
  BadParameters,
  InvalidArc,
  InvalidStarForest,
  ParseError,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries one of the codes above so the
// command line can map it onto an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  bool is_cap_overrun() const noexcept {
    return code_ == ErrorCode::CapExceeded || code_ == ErrorCode::ParityCapExceeded;
  }

 private:
  ErrorCode code_;
};

}  // namespace atplanar
