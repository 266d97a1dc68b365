#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace projectivoid {

enum class ErrorCode {
  InvalidPrime,
  PrimeMismatch,
  DivisionByZero,
  NegativeValuation,
  ZeroSeries,
  SubringViolation,
  NotAUnit,
  NonpositivePrecision,
  NormExceedsOne,
  InexactSeries,
  DimensionMismatch,
  NotATransitionMatrix,
  InvalidAutomorphism,
  NotInvertibleOverRing,
  IterationLimitExceeded,
  CertificateFailure,
  SyntaxError,
  WrongPrimeDenominator,
  RaggedMatrix,
};

std::string_view error_name(ErrorCode code) noexcept;

// Input errors are the ones a caller fixes by changing the literal or flags;
// everything else is a domain error raised by a well-formed computation.
bool is_input_error(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(error_name(code)) + ": " + detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  std::string_view name() const noexcept { return error_name(code_); }

 private:
  ErrorCode code_;
};

}  // namespace projectivoid
