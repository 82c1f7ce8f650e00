#include "restriction_lab/error.hpp"

namespace rlab {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid argument";
    case ErrorCode::kDimensionMismatch: return "dimension mismatch";
    case ErrorCode::kUnderResolved: return "under-resolved grid";
    case ErrorCode::kInsufficientTruncation: return "insufficient truncation";
    case ErrorCode::kFactorizationMismatch: return "factorization mismatch";
    case ErrorCode::kInconclusive: return "inconclusive";
    case ErrorCode::kZeroNorm: return "zero norm";
    case ErrorCode::kGridTooLarge: return "grid too large";
  }
  return "unknown error";
}

void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace rlab
