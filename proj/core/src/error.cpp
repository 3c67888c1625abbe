#include "nsgps/error.hpp"

namespace nsgps {

  std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
      case ErrorKind::EmptyInput: return "EmptyInput";
      case ErrorKind::InvalidArgument: return "InvalidArgument";
      case ErrorKind::NotNumerical: return "NotNumerical";
      case ErrorKind::NotMember: return "NotMember";
      case ErrorKind::Underdetermined: return "Underdetermined";
      case ErrorKind::Overflow: return "Overflow";
      case ErrorKind::NotSpecialGap: return "NotSpecialGap";
      case ErrorKind::NotMinimalGenerator: return "NotMinimalGenerator";
      case ErrorKind::NotAPermutation: return "NotAPermutation";
      case ErrorKind::TooManyGenerators: return "TooManyGenerators";
      case ErrorKind::NotFree: return "NotFree";
      case ErrorKind::HalfFactorial: return "HalfFactorial";
      case ErrorKind::DimensionMismatch: return "DimensionMismatch";
      case ErrorKind::DiagnosticOverflow: return "DiagnosticOverflow";
      case ErrorKind::ResourceLimit: return "ResourceLimit";
      case ErrorKind::GcdNotOne: return "GcdNotOne";
      case ErrorKind::NonIncreasing: return "NonIncreasing";
      case ErrorKind::NotDeltaSequence: return "NotDeltaSequence";
      case ErrorKind::InvariantViolation: return "InvariantViolation";
    }
    return "Unknown";
  }

  Error::Error(ErrorKind kind, std::string const& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        _kind(kind) {}

  void raise(ErrorKind kind, std::string const& what) {
    throw Error(kind, what);
  }

}  // namespace nsgps
