#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ratlab {

enum class ErrorCode {
  kInvalidArgument,
  kIndexOutOfRange,
  kOverflow,
  kDimensionMismatch,
  kNegativeSubtraction,
  kCapExceeded,
  kInvalidRow,
  kUnreachableTarget,
  kUnknownClaim,
  kUnsupportedFormat,
  kUnknownSession,
  kNotYourTurn,
  kGameOver,
  kConflict,
};

// Stable snake_case name, used in JSON error bodies.
std::string_view error_code_name(ErrorCode code);

// All domain failures are reported through this exception type. Callers that
// need to branch on the failure kind inspect code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ratlab
