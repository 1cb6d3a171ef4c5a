#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wsg {

enum class ErrorCode {
  NonPositive,
  NonPrimeP,
  NotPrimePower,
  BNotDividingA,
  SNotDividing,
  NEven,
  NTooSmall,
  GenusNotPositive,
  Overflow,
  BadM,
  BadIndexPair,
  GcdNotOne,
  EmptyInput,
  LengthMismatch,
  NotSorted,
  BadBox,
  TooLarge,
  InvariantViolation,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace wsg
