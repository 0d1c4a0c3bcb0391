#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace permbinom {

enum class ErrorCode {
  kNonPrime,
  kNotPrimePower,
  kReducibleModulus,
  kDegreeMismatch,
  kFieldTooLarge,
  kDivisionByZero,
  kZeroElement,
  kEvenCharacteristic,
  kBadFieldForCubic,
  kZeroPolynomial,
  kNonMinimalIndex,
  kGcdViolation,
  kEvenPrime,
  kSmallPrime,
  kUnsupportedPrime,
  kCrossCheckFailed,
  kEvenQ,
  kDivisibilityViolation,
  kGuardExceeded,
  kInvalidArgument,
  kIoError,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNonPrime: return "NonPrime";
    case ErrorCode::kNotPrimePower: return "NotPrimePower";
    case ErrorCode::kReducibleModulus: return "ReducibleModulus";
    case ErrorCode::kDegreeMismatch: return "DegreeMismatch";
    case ErrorCode::kFieldTooLarge: return "FieldTooLarge";
    case ErrorCode::kDivisionByZero: return "DivisionByZero";
    case ErrorCode::kZeroElement: return "ZeroElement";
    case ErrorCode::kEvenCharacteristic: return "EvenCharacteristic";
    case ErrorCode::kBadFieldForCubic: return "BadFieldForCubic";
    case ErrorCode::kZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::kNonMinimalIndex: return "NonMinimalIndex";
    case ErrorCode::kGcdViolation: return "GcdViolation";
    case ErrorCode::kEvenPrime: return "EvenPrime";
    case ErrorCode::kSmallPrime: return "SmallPrime";
    case ErrorCode::kUnsupportedPrime: return "UnsupportedPrime";
    case ErrorCode::kCrossCheckFailed: return "CrossCheckFailed";
    case ErrorCode::kEvenQ: return "EvenQ";
    case ErrorCode::kDivisibilityViolation: return "DivisibilityViolation";
    case ErrorCode::kGuardExceeded: return "GuardExceeded";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kIoError: return "IoError";
  }
  return "Unknown";
}

/// Exception carrying a machine-checkable error code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  /// Internal consistency failures (as opposed to bad input).
  bool is_math_disagreement() const noexcept {
    return code_ == ErrorCode::kCrossCheckFailed || code_ == ErrorCode::kDivisibilityViolation;
  }

 private:
  ErrorCode code_;
};

}  // namespace permbinom
