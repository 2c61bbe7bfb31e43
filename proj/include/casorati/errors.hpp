#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace casorati {

/// Stable error codes. The CLI prints these verbatim, so never renumber.
enum class ErrorCode {
  DivisionByZero,
  PoleAtPoint,
  NotSquarefree,
  OutOfWindow,
  ZeroDivisor,
  NoExactRoots,
  ZeroPolynomial,
  InsufficientWindow,
  PreconditionViolated,
  InconsistentMultiplier,
  EigenfailNumeric,
  SampleAtSingularity,
  TruncationTooSmall,
  NotASolution,
  NotClassifiable,
  CandidateNotARoot,
  InvalidArgument,
  SyntaxError,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::PoleAtPoint: return "PoleAtPoint";
    case ErrorCode::NotSquarefree: return "NotSquarefree";
    case ErrorCode::OutOfWindow: return "OutOfWindow";
    case ErrorCode::ZeroDivisor: return "ZeroDivisor";
    case ErrorCode::NoExactRoots: return "NoExactRoots";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::InsufficientWindow: return "InsufficientWindow";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::InconsistentMultiplier: return "InconsistentMultiplier";
    case ErrorCode::EigenfailNumeric: return "EigenfailNumeric";
    case ErrorCode::SampleAtSingularity: return "SampleAtSingularity";
    case ErrorCode::TruncationTooSmall: return "TruncationTooSmall";
    case ErrorCode::NotASolution: return "NotASolution";
    case ErrorCode::NotClassifiable: return "NotClassifiable";
    case ErrorCode::CandidateNotARoot: return "CandidateNotARoot";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::SyntaxError: return "SyntaxError";
  }
  return "Unknown";
}

/// Domain error raised by every library operation.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace casorati
