#pragma once

#include <stdexcept>
#include <string>

namespace gridknot {

enum class ErrorCode {
  InvalidSize,
  NotAPermutation,
  MarkingCollision,
  NotCoprime,
  InvalidParams,
  IllegalMove,
  IndexOutOfRange,
  NotAKnot,
  NotDiagonal,
  NonIntegerResult,
  NonDivisible,
  ZeroDeterminant,
  ParseError,
};

inline const char* error_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::InvalidSize: return "InvalidSize";
    case ErrorCode::NotAPermutation: return "NotAPermutation";
    case ErrorCode::MarkingCollision: return "MarkingCollision";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::IllegalMove: return "IllegalMove";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NotAKnot: return "NotAKnot";
    case ErrorCode::NotDiagonal: return "NotDiagonal";
    case ErrorCode::NonIntegerResult: return "NonIntegerResult";
    case ErrorCode::NonDivisible: return "NonDivisible";
    case ErrorCode::ZeroDeterminant: return "ZeroDeterminant";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "UnknownError";
}

// Domain error.  what() always starts with the code name so callers (and the
// CLI) can report errors by name.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(detail.empty()
                               ? std::string(error_name(code))
                               : std::string(error_name(code)) + ": " + detail),
        code_(code) {}
  explicit Error(ErrorCode code) : Error(code, "") {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& detail = "") {
  throw Error(code, detail);
}

}  // namespace gridknot
