#include "armafisher/error.h"

namespace armafisher {

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kEmptyCoefficients: return "EmptyCoefficients";
    case ErrorCode::kConstantTermNotOne: return "ConstantTermNotOne";
    case ErrorCode::kBadDimension: return "BadDimension";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kDegreeMismatch: return "DegreeMismatch";
    case ErrorCode::kNotAFactor: return "NotAFactor";
    case ErrorCode::kBadFactorization: return "BadFactorization";
    case ErrorCode::kNotCommonZero: return "NotCommonZero";
    case ErrorCode::kPoleEvaluation: return "PoleEvaluation";
    case ErrorCode::kBadConfig: return "BadConfig";
    case ErrorCode::kBadModel: return "BadModel";
    case ErrorCode::kNotStable: return "NotStable";
    case ErrorCode::kNoConvergence: return "NoConvergence";
    case ErrorCode::kSingularSystem: return "SingularSystem";
  }
  return "Unknown";
}

bool IsNumericalFailure(ErrorCode code) {
  return code == ErrorCode::kNotStable || code == ErrorCode::kNoConvergence ||
         code == ErrorCode::kSingularSystem;
}

}  // namespace armafisher
