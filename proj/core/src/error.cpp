#include "binomcong/error.hpp"

namespace binomcong {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::ZeroInverse: return "ZeroInverse";
    case ErrorCode::DenominatorDivisible: return "DenominatorDivisible";
    case ErrorCode::EvenModulus: return "EvenModulus";
    case ErrorCode::IndexTooLarge: return "IndexTooLarge";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::UnsupportedModulus: return "UnsupportedModulus";
    case ErrorCode::NonNegativeDiscriminant: return "NonNegativeDiscriminant";
    case ErrorCode::InvalidDiscriminant: return "InvalidDiscriminant";
    case ErrorCode::NotOneModFour: return "NotOneModFour";
    case ErrorCode::NoneRepresents: return "NoneRepresents";
    case ErrorCode::MultipleClassesRepresent: return "MultipleClassesRepresent";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::ModulusDivisibleBy3: return "ModulusDivisibleBy3";
    case ErrorCode::DegenerateInput: return "DegenerateInput";
    case ErrorCode::UnknownId: return "UnknownId";
    case ErrorCode::RowDispatchViolation: return "RowDispatchViolation";
    case ErrorCode::RowValueUndefined: return "RowValueUndefined";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace binomcong
