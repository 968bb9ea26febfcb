#pragma once

#include <stdexcept>
#include <string>

namespace armafisher {

enum class ErrorCode {
  // Input validation.
  kEmptyCoefficients,
  kConstantTermNotOne,
  kBadDimension,
  kDimensionMismatch,
  kDegreeMismatch,
  kNotAFactor,
  kBadFactorization,
  kNotCommonZero,
  kPoleEvaluation,
  kBadConfig,
  kBadModel,
  // Numerical failure.
  kNotStable,
  kNoConvergence,
  kSingularSystem,
};

const char* ErrorCodeName(ErrorCode code);

// True for codes that signal a numerical failure rather than bad input.
bool IsNumericalFailure(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace armafisher
