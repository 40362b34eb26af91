#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace subsol {

enum class ErrorCode {
  InvalidArgument,
  DivisionByZero,
  DegreeMismatch,
  CapExceeded,
  NotEnumerated,
  NotSubgroup,
  NotSoluble,
  NotPrime,
  NotFound,
  Collinear,
  NotDivisible,
  UnsupportedShape,
  RatioOutOfRange,
  QTooSmall,
  BadTarget,
  NotIsoscelesTrapezium,
  Degenerate,
  BisectionFailed,
  ScaleMismatch,
  ScalarKindMismatch,
  NotSubpattern,
  TooLarge,
  SchemaError,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries a machine-readable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace subsol
