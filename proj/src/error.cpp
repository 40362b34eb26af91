#include "subsol/error.hpp"

namespace subsol {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::NotEnumerated: return "NotEnumerated";
    case ErrorCode::NotSubgroup: return "NotSubgroup";
    case ErrorCode::NotSoluble: return "NotSoluble";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::NotFound: return "NotFound";
    case ErrorCode::Collinear: return "Collinear";
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::UnsupportedShape: return "UnsupportedShape";
    case ErrorCode::RatioOutOfRange: return "RatioOutOfRange";
    case ErrorCode::QTooSmall: return "QTooSmall";
    case ErrorCode::BadTarget: return "BadTarget";
    case ErrorCode::NotIsoscelesTrapezium: return "NotIsoscelesTrapezium";
    case ErrorCode::Degenerate: return "Degenerate";
    case ErrorCode::BisectionFailed: return "BisectionFailed";
    case ErrorCode::ScaleMismatch: return "ScaleMismatch";
    case ErrorCode::ScalarKindMismatch: return "ScalarKindMismatch";
    case ErrorCode::NotSubpattern: return "NotSubpattern";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::SchemaError: return "SchemaError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace subsol
