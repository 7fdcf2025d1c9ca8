#pragma once

#include <stdexcept>
#include <string>

namespace plingam {

// Error taxonomy shared across the library. The CLI maps codes onto exit
// categories (usage / data / numeric).
enum class ErrorCode {
  NonFinite,
  ZeroVariance,
  TooFewSamples,
  TooShort,
  LengthMismatch,
  DimensionMismatch,
  EmptyCandidates,
  SingularDesign,
  InsufficientRows,
  UnstableSystem,
  OutOfRange,
  InvalidIndex,
  ParseError,
  IoError,
  InvalidFlags,
  EmptyAfterPreprocessing,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, long row = -1, long col = -1)
      : std::runtime_error(message), code_(code), row_(row), col_(col) {}

  ErrorCode code() const noexcept { return code_; }

  // Row/column context where it applies (CSV cell, matrix entry, variable
  // index); -1 when not meaningful.
  long row() const noexcept { return row_; }
  long col() const noexcept { return col_; }

 private:
  ErrorCode code_;
  long row_;
  long col_;
};

}  // namespace plingam
