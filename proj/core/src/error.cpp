#include "univalent/error.hpp"

namespace univalent {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DivisionByZeroLeadingTerm: return "DivisionByZeroLeadingTerm";
    case ErrorCode::EvalRadiusExceeded: return "EvalRadiusExceeded";
    case ErrorCode::InvalidMeasure: return "InvalidMeasure";
    case ErrorCode::AlphaOutOfRange: return "AlphaOutOfRange";
    case ErrorCode::UnknownFunctionId: return "UnknownFunctionId";
    case ErrorCode::MissingGenerator: return "MissingGenerator";
    case ErrorCode::InsufficientTruncation: return "InsufficientTruncation";
    case ErrorCode::UnknownFunctional: return "UnknownFunctional";
    case ErrorCode::IndexError: return "IndexError";
    case ErrorCode::LambdaBelowThreshold: return "LambdaBelowThreshold";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::ParamOutOfRange: return "ParamOutOfRange";
    case ErrorCode::UnknownLemmaId: return "UnknownLemmaId";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::UnknownExperimentId: return "UnknownExperimentId";
    case ErrorCode::MalformedSpec: return "MalformedSpec";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace univalent
