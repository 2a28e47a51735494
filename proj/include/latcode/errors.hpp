// Typed error conditions shared across the library.
#pragma once

#include <stdexcept>
#include <string>

namespace latcode {

enum class ErrorCode {
  NotPrime,
  NoIrreducible,
  DivisionByZero,
  LengthMismatch,
  RankDeficient,
  TooLarge,
  NestingViolation,
  NotLatticePoint,
  PowerViolation,
  DitherOutOfRegion,
  BadParams,
  SamplingExhausted,
  DimensionBoundViolation,
  InfeasiblePlan,
  DegenerateCoefficients,
  ConfigError,
};

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::NoIrreducible: return "NoIrreducible";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NestingViolation: return "NestingViolation";
    case ErrorCode::NotLatticePoint: return "NotLatticePoint";
    case ErrorCode::PowerViolation: return "PowerViolation";
    case ErrorCode::DitherOutOfRegion: return "DitherOutOfRegion";
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::SamplingExhausted: return "SamplingExhausted";
    case ErrorCode::DimensionBoundViolation: return "DimensionBoundViolation";
    case ErrorCode::InfeasiblePlan: return "InfeasiblePlan";
    case ErrorCode::DegenerateCoefficients: return "DegenerateCoefficients";
    case ErrorCode::ConfigError: return "ConfigError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

inline void require(bool cond, ErrorCode code, const std::string& what) {
  if (!cond) fail(code, what);
}

}  // namespace latcode
