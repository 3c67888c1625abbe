#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nsgps {

  enum class ErrorKind {
    EmptyInput,
    InvalidArgument,
    NotNumerical,
    NotMember,
    Underdetermined,
    Overflow,
    NotSpecialGap,
    NotMinimalGenerator,
    NotAPermutation,
    TooManyGenerators,
    NotFree,
    HalfFactorial,
    DimensionMismatch,
    DiagnosticOverflow,
    ResourceLimit,
    GcdNotOne,
    NonIncreasing,
    NotDeltaSequence,
    InvariantViolation
  };

  std::string_view to_string(ErrorKind kind) noexcept;

  // Every domain error raised by the library. The kind is stable and is what
  // callers (and the CLI exit-code mapping) should dispatch on.
  class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, std::string const& what);

    ErrorKind kind() const noexcept {
      return _kind;
    }

   private:
    ErrorKind _kind;
  };

  [[noreturn]] void raise(ErrorKind kind, std::string const& what);

}  // namespace nsgps
