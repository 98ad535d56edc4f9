#pragma once

#include <stdexcept>
#include <string>

namespace brsieve {

// Mirrors the status codes of the C API (see include/brsieve/brsieve.h).
enum class ErrorCode {
  kInvalidArgument = 1,
  kParse = 2,
  kBudgetExceeded = 3,
  kUnsupported = 4,
  kInvariantViolation = 5,
  kIndeterminate = 6,
  kInternal = 7,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

inline void require(bool cond, const std::string& what) {
  if (!cond) fail(ErrorCode::kInvalidArgument, what);
}

}  // namespace brsieve
