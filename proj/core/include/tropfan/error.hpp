#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tropfan {

/// Machine-readable failure category carried by every library error.
enum class ErrorCode {
  ParseError,
  DimensionMismatch,
  BadParameters,
  EmptyPolynomial,
  NonBooleanInput,
  ZeroVector,
  DuplicateRay,
  NotBalanced,
  NotRealizable,
  NotLeftInvertible,
  NoMutualFactorization,
  InvalidMorphism,
  InvalidHomSpec,
  NotGeometric,
  NoIntegerSolution,
  SupportViolation,
  CompositionMismatch,
  Unsupported,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace tropfan
