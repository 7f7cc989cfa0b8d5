#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qqplane {

enum class Errc {
  NotPrime,
  DivisionByZero,
  FieldMismatch,
  BadScalar,
  ZeroTriple,
  RoleMismatch,
  CoincidentPoints,
  CoincidentLines,
  SingularMatrix,
  InvalidQuadrangle,
  InvalidQuadrilateral,
  DiagonalsCollinear,
  DiagonalsConcurrent,
  NotPerspectiveFromPoint,
  DegenerateTriangle,
  CorrespondingSidesEqual,
  PlaneTooLarge,
  MalformedJson,
  GeneralPositionViolation,
  MissingFigure,
  // An identity that holds in every coordinate plane failed; always a bug.
  InvariantViolation,
};

constexpr std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::NotPrime: return "NotPrime";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::BadScalar: return "BadScalar";
    case Errc::ZeroTriple: return "ZeroTriple";
    case Errc::RoleMismatch: return "RoleMismatch";
    case Errc::CoincidentPoints: return "CoincidentPoints";
    case Errc::CoincidentLines: return "CoincidentLines";
    case Errc::SingularMatrix: return "SingularMatrix";
    case Errc::InvalidQuadrangle: return "InvalidQuadrangle";
    case Errc::InvalidQuadrilateral: return "InvalidQuadrilateral";
    case Errc::DiagonalsCollinear: return "DiagonalsCollinear";
    case Errc::DiagonalsConcurrent: return "DiagonalsConcurrent";
    case Errc::NotPerspectiveFromPoint: return "NotPerspectiveFromPoint";
    case Errc::DegenerateTriangle: return "DegenerateTriangle";
    case Errc::CorrespondingSidesEqual: return "CorrespondingSidesEqual";
    case Errc::PlaneTooLarge: return "PlaneTooLarge";
    case Errc::MalformedJson: return "MalformedJson";
    case Errc::GeneralPositionViolation: return "GeneralPositionViolation";
    case Errc::MissingFigure: return "MissingFigure";
    case Errc::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code), detail_(what) {}

  Errc code() const noexcept { return code_; }
  /// The message without the error-name prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  Errc code_;
  std::string detail_;
};

}  // namespace qqplane
