#include "tropfan/error.hpp"

namespace tropfan {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::BadParameters: return "BadParameters";
    case ErrorCode::EmptyPolynomial: return "EmptyPolynomial";
    case ErrorCode::NonBooleanInput: return "NonBooleanInput";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::DuplicateRay: return "DuplicateRay";
    case ErrorCode::NotBalanced: return "NotBalanced";
    case ErrorCode::NotRealizable: return "NotRealizable";
    case ErrorCode::NotLeftInvertible: return "NotLeftInvertible";
    case ErrorCode::NoMutualFactorization: return "NoMutualFactorization";
    case ErrorCode::InvalidMorphism: return "InvalidMorphism";
    case ErrorCode::InvalidHomSpec: return "InvalidHomSpec";
    case ErrorCode::NotGeometric: return "NotGeometric";
    case ErrorCode::NoIntegerSolution: return "NoIntegerSolution";
    case ErrorCode::SupportViolation: return "SupportViolation";
    case ErrorCode::CompositionMismatch: return "CompositionMismatch";
    case ErrorCode::Unsupported: return "Unsupported";
  }
  return "Unknown";
}

}  // namespace tropfan
