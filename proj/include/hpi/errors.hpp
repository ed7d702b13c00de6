#pragma once

#include <stdexcept>
#include <string>

namespace hpi {

// Failure classes surfaced by the library. The CLI maps each to a distinct
// process exit code, so keep the enumeration stable.
enum class ErrorCode {
  ParseError,               // model file or polynomial text rejected
  ValidationError,          // structural checks failed (associativity, rule check, bad dims)
  SplitFailure,             // semisimple part does not split over the rationals
  NotHInvariant,            // a required subspace is not stable under the operator algebra
  NotHSimple,               // quotient blocks admit a proper invariant ideal
  SizeLimit,                // configured row/column/tuple budget exceeded
  InternalCheck,            // cross-method or integrality consistency check failed
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::ParseError: return "PARSE_ERROR";
    case ErrorCode::ValidationError: return "VALIDATION_ERROR";
    case ErrorCode::SplitFailure: return "SPLIT_FAILURE";
    case ErrorCode::NotHInvariant: return "NOT_H_INVARIANT";
    case ErrorCode::NotHSimple: return "NOT_H_SIMPLE";
    case ErrorCode::SizeLimit: return "SIZE_LIMIT";
    case ErrorCode::InternalCheck: return "INTERNAL_CHECK";
  }
  return "UNKNOWN";
}

}  // namespace hpi
