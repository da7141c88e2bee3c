#pragma once

#include <stdexcept>
#include <string>

namespace lcz {

// Stable codes; the C API and the CLI exit status are derived from these.
enum class ErrorCode {
  ParseError = 1,
  ExactUnsupported,
  DegenerateMetric,
  DimensionMismatch,
  NotLieAlgebra,
  NotSelfAdjoint,
  BadDecomposition,
  TypeMismatch,
  NotLorentzian,
  DefectiveAmbiguity,
  BadParam,
  NotEinstein,
  ConstraintViolation,
  DuplicateBracket,
  UnknownName,
  BackendMismatch,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace lcz
