#include "skw/error.hpp"

namespace skw {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::MixedLength: return "MixedLength";
    case Errc::MixedAmbient: return "MixedAmbient";
    case Errc::InvalidModulus: return "InvalidModulus";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::DegenerateParams: return "DegenerateParams";
    case Errc::SmallOrder: return "SmallOrder";
    case Errc::OrientationFailure: return "OrientationFailure";
    case Errc::NotOnCurve: return "NotOnCurve";
    case Errc::FormulaDegenerate: return "FormulaDegenerate";
    case Errc::TranslationMismatch: return "TranslationMismatch";
    case Errc::NoPointFound: return "NoPointFound";
    case Errc::SingularPoint: return "SingularPoint";
    case Errc::JetCapExceeded: return "JetCapExceeded";
    case Errc::OrbitAmbiguity: return "OrbitAmbiguity";
    case Errc::NotVirtuallyEffective: return "NotVirtuallyEffective";
    case Errc::NegativeMultiplicity: return "NegativeMultiplicity";
    case Errc::RankDeficit: return "RankDeficit";
    case Errc::NonEffective: return "NonEffective";
    case Errc::ResidualDegreeZero: return "ResidualDegreeZero";
    case Errc::DimMismatch: return "DimMismatch";
    case Errc::WindowExceeded: return "WindowExceeded";
    case Errc::CentralityFailure: return "CentralityFailure";
    case Errc::CentreDimUnexpected: return "CentreDimUnexpected";
    case Errc::NotInOmega: return "NotInOmega";
    case Errc::ParseError: return "ParseError";
    case Errc::ValidationError: return "ValidationError";
    case Errc::UnknownPoint: return "UnknownPoint";
    case Errc::CorruptCache: return "CorruptCache";
    case Errc::IoError: return "IoError";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

ParseError::ParseError(int line, const std::string& what)
    : Error(Errc::ParseError, what), line_(line) {}

}  // namespace skw
