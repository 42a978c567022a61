#include "isokit/error.hpp"

namespace isokit {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::BadInput: return "BadInput";
    case ErrorCode::InvalidDatum: return "InvalidDatum";
    case ErrorCode::UnknownPreset: return "UnknownPreset";
    case ErrorCode::BadParameter: return "BadParameter";
    case ErrorCode::BadSubset: return "BadSubset";
    case ErrorCode::NotDominant: return "NotDominant";
    case ErrorCode::NotMinuscule: return "NotMinuscule";
    case ErrorCode::OrbitTooLarge: return "OrbitTooLarge";
    case ErrorCode::NotPinned: return "NotPinned";
    case ErrorCode::NotSigmaStable: return "NotSigmaStable";
    case ErrorCode::NonIntegralBreakpoint: return "NonIntegralBreakpoint";
    case ErrorCode::UnknownFormat: return "UnknownFormat";
    case ErrorCode::NotElliptic: return "NotElliptic";
    case ErrorCode::NoWitness: return "NoWitness";
    case ErrorCode::NotInCorootLattice: return "NotInCorootLattice";
    case ErrorCode::InconsistentLocalData: return "InconsistentLocalData";
    case ErrorCode::UnsupportedCentralizer: return "UnsupportedCentralizer";
  }
  return "Unknown";
}

}  // namespace isokit
