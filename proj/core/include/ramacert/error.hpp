#pragma once

#include <stdexcept>
#include <string>

namespace ramacert {

// Every failure mode the library reports. Input-class codes map to CLI
// exit code 2, InternalInconsistency to exit code 3.
enum class ErrorCode {
  EmptyGraph,
  NotBiregular,
  NotConnected,
  NotRegular,
  ParallelEdges,
  InfeasibleDegrees,
  RetryLimitExceeded,
  SyntaxError,
  SizeLimitExceeded,
  AcyclicGraph,
  InconsistentFactorization,
  InvalidQ,
  UnsupportedXi,
  PoleAtMinusMu,
  ThetaSingular,
  InvalidArgument,
  InternalInconsistency,
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyGraph: return "EmptyGraph";
    case ErrorCode::NotBiregular: return "NotBiregular";
    case ErrorCode::NotConnected: return "NotConnected";
    case ErrorCode::NotRegular: return "NotRegular";
    case ErrorCode::ParallelEdges: return "ParallelEdges";
    case ErrorCode::InfeasibleDegrees: return "InfeasibleDegrees";
    case ErrorCode::RetryLimitExceeded: return "RetryLimitExceeded";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::SizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorCode::AcyclicGraph: return "AcyclicGraph";
    case ErrorCode::InconsistentFactorization: return "InconsistentFactorization";
    case ErrorCode::InvalidQ: return "InvalidQ";
    case ErrorCode::UnsupportedXi: return "UnsupportedXi";
    case ErrorCode::PoleAtMinusMu: return "PoleAtMinusMu";
    case ErrorCode::ThetaSingular: return "ThetaSingular";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  // True for errors caused by the input rather than by a bug.
  bool is_input_error() const noexcept {
    return code_ != ErrorCode::InternalInconsistency;
  }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace ramacert
