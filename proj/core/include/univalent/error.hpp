#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace univalent {

enum class ErrorCode {
  DivisionByZeroLeadingTerm,
  EvalRadiusExceeded,
  InvalidMeasure,
  AlphaOutOfRange,
  UnknownFunctionId,
  MissingGenerator,
  InsufficientTruncation,
  UnknownFunctional,
  IndexError,
  LambdaBelowThreshold,
  DomainError,
  ParamOutOfRange,
  UnknownLemmaId,
  BudgetExceeded,
  UnknownExperimentId,
  MalformedSpec,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every recoverable failure in the library is reported through this type;
/// callers switch on code() rather than on the message text.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace univalent
