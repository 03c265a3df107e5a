#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace topolab {

enum class ErrorCode {
  NotATopology = 1,
  GroundSetMismatch,
  NotPiCompatible,
  NotOpen,
  EmptyInput,
  TooLarge,
  NOutOfRange,
  UnknownTheorem,
  UnknownPredicate,
  UnsupportedPair,
  SizeMismatch,
  EmptyBase,
  PreconditionFailed,
  InvalidGroup,
  ParseError,
  InvalidArgument,
};

std::string_view error_code_name(ErrorCode code);

// All library failures surface as this exception; the C API maps `code()`
// onto its status values.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace topolab
