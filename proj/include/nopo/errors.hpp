#pragma once

#include <stdexcept>
#include <string>

namespace nopo {

enum class ErrorCode {
  InvalidParams,
  PoleInput,
  Nonconvergence,
  DegenerateInput,
  DomainError,
  UndefinedPhase,
  UnsupportedDetuning,
  SolverFailure,
  CutoffInsufficient,
  AccuracyGuard,
};

inline const char* errorCodeName(ErrorCode c) {
  switch (c) {
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::PoleInput: return "PoleInput";
    case ErrorCode::Nonconvergence: return "Nonconvergence";
    case ErrorCode::DegenerateInput: return "DegenerateInput";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::UndefinedPhase: return "UndefinedPhase";
    case ErrorCode::UnsupportedDetuning: return "UnsupportedDetuning";
    case ErrorCode::SolverFailure: return "SolverFailure";
    case ErrorCode::CutoffInsufficient: return "CutoffInsufficient";
    case ErrorCode::AccuracyGuard: return "AccuracyGuard";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& msg)
      : std::runtime_error(std::string(errorCodeName(code)) + ": " + msg), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) { throw Error(code, msg); }

}  // namespace nopo
