#pragma once

#include <stdexcept>
#include <string>

namespace hyperrcd {

// Every failure the library can report. CLI exit messages and the python
// bindings key off these names, so keep them stable.
enum class ErrorCode {
  DegenerateHyperedge,
  NonPositiveWeight,
  Disconnected,
  AlphaOutOfRange,
  UnbalancedMeasures,
  LabelLengthMismatch,
  VertexSetMismatch,
  InfeasibleParams,
  NonFiniteWeight,
  ParseError,
  BudgetExceeded,
  InternalError,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

  // "NonPositiveWeight: hyperedge 3 has weight 0" -- single line, suitable for
  // machine parsing on stderr.
  std::string formatted() const {
    return std::string(error_code_name(code_)) + ": " + what();
  }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace hyperrcd
