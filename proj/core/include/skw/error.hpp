#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace skw {

enum class Errc {
  MixedLength,
  MixedAmbient,
  InvalidModulus,
  DivisionByZero,
  DegenerateParams,
  SmallOrder,
  OrientationFailure,
  NotOnCurve,
  FormulaDegenerate,
  TranslationMismatch,
  NoPointFound,
  SingularPoint,
  JetCapExceeded,
  OrbitAmbiguity,
  NotVirtuallyEffective,
  NegativeMultiplicity,
  RankDeficit,
  NonEffective,
  ResidualDegreeZero,
  DimMismatch,
  WindowExceeded,
  CentralityFailure,
  CentreDimUnexpected,
  NotInOmega,
  ParseError,
  ValidationError,
  UnknownPoint,
  CorruptCache,
  IoError,
};

std::string_view errc_name(Errc code) noexcept;

/// Exception carrying a machine-readable error code.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Parse failure with a 1-based line (or column for single-line input).
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what);
  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace skw
