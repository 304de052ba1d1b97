#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qpsym {

enum class ErrorKind {
  // exact math
  ZeroPolynomial,
  EndpointIsRoot,
  InvalidInterval,
  RankDeficient,
  ShapeMismatch,
  // number fields
  Reducible,
  IrreducibilityUndecided,
  NotIsolating,
  NoRealRoot,
  NotMonic,
  DegreeTooSmall,
  DivisionByZero,
  FieldMismatch,
  // units
  NotSquarefree,
  OutOfRange,
  NotAUnit,
  TorsionOnly,
  GeneratorsRequired,
  WrongGeneratorCount,
  // multipliers
  NotQuasiperiodic,
  RankUnsupported,
  IndexBoundExceeded,
  NotAMultiplier,
  NotASymmetry,
  NotUnimodular,
  // conjugacy
  NotSemiconjugate,
  NotConjugate,
  // input
  ParseError,
  InvalidArgument,
  // a computed result failed its own consistency check
  InternalInconsistency,
};

constexpr std::string_view error_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::EndpointIsRoot: return "EndpointIsRoot";
    case ErrorKind::InvalidInterval: return "InvalidInterval";
    case ErrorKind::RankDeficient: return "RankDeficient";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::Reducible: return "Reducible";
    case ErrorKind::IrreducibilityUndecided: return "IrreducibilityUndecided";
    case ErrorKind::NotIsolating: return "NotIsolating";
    case ErrorKind::NoRealRoot: return "NoRealRoot";
    case ErrorKind::NotMonic: return "NotMonic";
    case ErrorKind::DegreeTooSmall: return "DegreeTooSmall";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::NotSquarefree: return "NotSquarefree";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::NotAUnit: return "NotAUnit";
    case ErrorKind::TorsionOnly: return "TorsionOnly";
    case ErrorKind::GeneratorsRequired: return "GeneratorsRequired";
    case ErrorKind::WrongGeneratorCount: return "WrongGeneratorCount";
    case ErrorKind::NotQuasiperiodic: return "NotQuasiperiodic";
    case ErrorKind::RankUnsupported: return "RankUnsupported";
    case ErrorKind::IndexBoundExceeded: return "IndexBoundExceeded";
    case ErrorKind::NotAMultiplier: return "NotAMultiplier";
    case ErrorKind::NotASymmetry: return "NotASymmetry";
    case ErrorKind::NotUnimodular: return "NotUnimodular";
    case ErrorKind::NotSemiconjugate: return "NotSemiconjugate";
    case ErrorKind::NotConjugate: return "NotConjugate";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the named kinds above;
/// what() is "<Kind>: <detail>".
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(error_name(kind)) + ": " + detail),
        kind_(kind),
        detail_(detail) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::string_view name() const noexcept { return error_name(kind_); }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& detail) {
  throw Error(kind, detail);
}

}  // namespace qpsym
