#pragma once

#include <stdexcept>
#include <string>

namespace wwm {

// Error taxonomy shared by all modules.  The CLI maps these onto its
// documented exit codes (see README): config errors -> 2, numeric
// precondition failures -> 3, orthogonality failures -> 4.
enum class Err {
  InvalidGrid,
  GridMismatch,
  KindMismatch,
  BoundaryLeak,
  OffGridShift,
  OffGridReflection,
  OffGrid,
  DegreeTooHigh,
  AliasedSymbol,
  OrthogonalStates,
  OrthogonalAuxiliary,
  SmallMomentumAmplitude,
  NodeParity,
  ZeroSum,
  IndexTooHigh,
  CenterTooFarOut,
  ConfigError,
  IoError,
};

class Error : public std::runtime_error {
 public:
  Error(Err code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Err code() const { return code_; }

 private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& what) { throw Error(code, what); }

inline const char* to_string(Err code) {
  switch (code) {
    case Err::InvalidGrid: return "InvalidGrid";
    case Err::GridMismatch: return "GridMismatch";
    case Err::KindMismatch: return "KindMismatch";
    case Err::BoundaryLeak: return "BoundaryLeak";
    case Err::OffGridShift: return "OffGridShift";
    case Err::OffGridReflection: return "OffGridReflection";
    case Err::OffGrid: return "OffGrid";
    case Err::DegreeTooHigh: return "DegreeTooHigh";
    case Err::AliasedSymbol: return "AliasedSymbol";
    case Err::OrthogonalStates: return "OrthogonalStates";
    case Err::OrthogonalAuxiliary: return "OrthogonalAuxiliary";
    case Err::SmallMomentumAmplitude: return "SmallMomentumAmplitude";
    case Err::NodeParity: return "NodeParity";
    case Err::ZeroSum: return "ZeroSum";
    case Err::IndexTooHigh: return "IndexTooHigh";
    case Err::CenterTooFarOut: return "CenterTooFarOut";
    case Err::ConfigError: return "ConfigError";
    case Err::IoError: return "IoError";
  }
  return "Error";
}

}  // namespace wwm
