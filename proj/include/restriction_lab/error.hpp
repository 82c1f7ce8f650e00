#pragma once

#include <stdexcept>
#include <string>

namespace rlab {

enum class ErrorCode {
  kInvalidArgument,
  kDimensionMismatch,
  kUnderResolved,
  kInsufficientTruncation,
  kFactorizationMismatch,
  kInconclusive,
  kZeroNorm,
  kGridTooLarge,
};

const char* error_code_name(ErrorCode code);

// All library failures are reported through this type; the C API maps the
// code onto its status enum.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

inline void require(bool condition, const std::string& message) {
  if (!condition) fail(ErrorCode::kInvalidArgument, message);
}

}  // namespace rlab
