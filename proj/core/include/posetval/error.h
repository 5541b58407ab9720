#ifndef POSETVAL_ERROR_H_
#define POSETVAL_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace posetval {

enum class ErrorCode {
  kCycleDetected,
  kUnknownElement,
  kEmptyPoset,
  kNotBounded,
  kNonMonotone,
  kPreconditionUnmet,
  kNotTotal,
  kWeightPosetMismatch,
  kNegativeWeight,
  kZeroScale,
  kNonPositiveValue,
  kRowMismatch,
  kDomainConditionFailed,
  kNotNormalized,
  kEmptyFilterIntersection,
  kUnknownTarget,
  kUnknownName,
  kOrderCapExceeded,
  kInvalidGroup,
  kParseError,
  kInvalidArgument,
};

std::string_view ToString(ErrorCode code);

// All library failures are reported through this type; code() identifies
// the failure class, what() carries a human-readable message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& message)
      : Error(ErrorCode::kParseError,
              "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace posetval

#endif  // POSETVAL_ERROR_H_
