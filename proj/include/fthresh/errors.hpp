#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fthresh {

enum class ErrorCode {
  InvalidArgument,
  NotPrime,
  RingMismatch,
  ExponentOverflow,
  SyntaxError,
  UnknownVariable,
  NegativeExponent,
  ZeroPolynomial,
  WrongCharacteristic,
  NotInMaximalIdeal,
  OracleTooLarge,
  WrongDomain,
  NegativeExponentParameter,
  ScanTooLarge,
  EmptyExponentList,
  NotCoprime,
  IrrationalCenter,
  NotSquareFree,
  DoesNotVanishAtOrigin,
  UnknownFixture,
  BadReduction,
  NotHomogeneousCubic,
};

const char* error_code_name(ErrorCode code) noexcept;

/// Domain error raised by every operation in the library. The code is stable
/// and is what callers (and the CLI exit-code mapping) dispatch on.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Parse failure with the byte offset into the input where it was detected.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& what)
      : Error(ErrorCode::SyntaxError, what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace fthresh
