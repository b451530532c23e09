#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace padic {

enum class ErrorKind {
  NotPrime,
  InvalidContext,
  ContextMismatch,
  ZeroDenominator,
  DivisionByZero,
  PrecisionExhausted,
  NonSquare,
  ParseError,
  WrongPrimeClass,
  DomainError,
  NotPauliShape,
  NotRotationShape,
  DegenerateRotation,
  IsotropicAxis,
  PoleHit,
  OutsideDisk,
  NearPole,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
  case ErrorKind::NotPrime: return "NotPrime";
  case ErrorKind::InvalidContext: return "InvalidContext";
  case ErrorKind::ContextMismatch: return "ContextMismatch";
  case ErrorKind::ZeroDenominator: return "ZeroDenominator";
  case ErrorKind::DivisionByZero: return "DivisionByZero";
  case ErrorKind::PrecisionExhausted: return "PrecisionExhausted";
  case ErrorKind::NonSquare: return "NonSquare";
  case ErrorKind::ParseError: return "ParseError";
  case ErrorKind::WrongPrimeClass: return "WrongPrimeClass";
  case ErrorKind::DomainError: return "DomainError";
  case ErrorKind::NotPauliShape: return "NotPauliShape";
  case ErrorKind::NotRotationShape: return "NotRotationShape";
  case ErrorKind::DegenerateRotation: return "DegenerateRotation";
  case ErrorKind::IsotropicAxis: return "IsotropicAxis";
  case ErrorKind::PoleHit: return "PoleHit";
  case ErrorKind::OutsideDisk: return "OutsideDisk";
  case ErrorKind::NearPole: return "NearPole";
  }
  return "Unknown";
}

/// Every failure raised by the library carries a machine-readable kind; the
/// message is prefixed with the kind name so diagnostics name the failing rule.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string &what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

class ParseError : public Error {
public:
  ParseError(std::size_t position, const std::string &what)
      : Error(ErrorKind::ParseError,
              what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

} // namespace padic
