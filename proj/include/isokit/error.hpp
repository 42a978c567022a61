#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace isokit {

enum class ErrorCode {
  DimensionMismatch,
  BadInput,
  InvalidDatum,
  UnknownPreset,
  BadParameter,
  BadSubset,
  NotDominant,
  NotMinuscule,
  OrbitTooLarge,
  NotPinned,
  NotSigmaStable,
  NonIntegralBreakpoint,
  UnknownFormat,
  NotElliptic,
  NoWitness,
  NotInCorootLattice,
  InconsistentLocalData,
  UnsupportedCentralizer,
};

std::string_view to_string(ErrorCode code);

/// Library error; `code()` identifies the failure for callers that branch on it.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace isokit
