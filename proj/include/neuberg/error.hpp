#pragma once

#include <stdexcept>
#include <string>

namespace neuberg {

enum class Errc {
  NotPrime,
  ZeroInverse,
  FieldMismatch,
  EnumerationBound,
  InvalidLine,
  CoincidentPoints,
  NullLine,
  DegreeBound,
  DegreeMismatch,
  DegenerateTriangle,
  NullSide,
  NoBisectors,
  EquilateralDegenerate,
  ThreeNotSquare,
  BisectorParallelToSide,
  NotOnCurve,
  SingularPoint,
  LineOnCurve,
  IncompleteQuadrangle,
  AlignmentFailure,
  DegenerateConfiguration,
  NoInfinitePoint,
  ParseError,
  InvalidInput,
};

constexpr const char* to_string(Errc code) {
  switch (code) {
    case Errc::NotPrime: return "NotPrime";
    case Errc::ZeroInverse: return "ZeroInverse";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::EnumerationBound: return "EnumerationBound";
    case Errc::InvalidLine: return "InvalidLine";
    case Errc::CoincidentPoints: return "CoincidentPoints";
    case Errc::NullLine: return "NullLine";
    case Errc::DegreeBound: return "DegreeBound";
    case Errc::DegreeMismatch: return "DegreeMismatch";
    case Errc::DegenerateTriangle: return "DegenerateTriangle";
    case Errc::NullSide: return "NullSide";
    case Errc::NoBisectors: return "NoBisectors";
    case Errc::EquilateralDegenerate: return "EquilateralDegenerate";
    case Errc::ThreeNotSquare: return "ThreeNotSquare";
    case Errc::BisectorParallelToSide: return "BisectorParallelToSide";
    case Errc::NotOnCurve: return "NotOnCurve";
    case Errc::SingularPoint: return "SingularPoint";
    case Errc::LineOnCurve: return "LineOnCurve";
    case Errc::IncompleteQuadrangle: return "IncompleteQuadrangle";
    case Errc::AlignmentFailure: return "AlignmentFailure";
    case Errc::DegenerateConfiguration: return "DegenerateConfiguration";
    case Errc::NoInfinitePoint: return "NoInfinitePoint";
    case Errc::ParseError: return "ParseError";
    case Errc::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

/// Typed failure raised by every library operation. The code identifies the
/// degenerate input; the message carries human-readable detail.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace neuberg
