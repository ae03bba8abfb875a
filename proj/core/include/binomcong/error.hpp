#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace binomcong {

enum class ErrorCode {
  NotPrime,
  ZeroInverse,
  DenominatorDivisible,
  EvenModulus,
  IndexTooLarge,
  OutOfRange,
  DivisionByZero,
  UnsupportedModulus,
  NonNegativeDiscriminant,
  InvalidDiscriminant,
  NotOneModFour,
  NoneRepresents,
  MultipleClassesRepresent,
  NotCoprime,
  ModulusDivisibleBy3,
  DegenerateInput,
  UnknownId,
  RowDispatchViolation,
  RowValueUndefined,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every precondition failure in the library surfaces as this exception.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace binomcong
