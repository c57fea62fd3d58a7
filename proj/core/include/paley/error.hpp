#pragma once

#include <stdexcept>
#include <string>

namespace paley {

// Stable machine-readable failure kinds. The CLI maps these 1:1 to the
// "error_kind" field of JSON error reports, so renaming one is a
// breaking change.
enum class ErrorKind {
  EvenCharacteristic,
  NotPrime,
  NotPrimePower,
  ReduciblePolynomial,
  NoBuiltinPolynomial,
  DivisionByZero,
  NonResidue,
  DomainError,
  BudgetExceeded,
  TooLarge,
  NoParticularSolution,
  InvalidCover,
  NotCoEven,
  EmptySet,
  Infeasible,
  ConstructionFailed,
  ParseError,
  UsageError,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) {
  throw Error(kind, msg);
}

}  // namespace paley
