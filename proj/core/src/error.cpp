#include "paley/error.hpp"

namespace paley {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::EvenCharacteristic: return "EvenCharacteristic";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::NotPrimePower: return "NotPrimePower";
    case ErrorKind::ReduciblePolynomial: return "ReduciblePolynomial";
    case ErrorKind::NoBuiltinPolynomial: return "NoBuiltinPolynomial";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::NonResidue: return "NonResidue";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NoParticularSolution: return "NoParticularSolution";
    case ErrorKind::InvalidCover: return "InvalidCover";
    case ErrorKind::NotCoEven: return "NotCoEven";
    case ErrorKind::EmptySet: return "EmptySet";
    case ErrorKind::Infeasible: return "Infeasible";
    case ErrorKind::ConstructionFailed: return "ConstructionFailed";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UsageError: return "UsageError";
  }
  return "Unknown";
}

}  // namespace paley
