#pragma once

#include <stdexcept>
#include <string>

namespace hspin {

enum class Err {
  SpecMismatch,
  DivisionByZero,
  NegativeRadicand,
  AlreadySquare,
  UnsupportedDenominator,
  PoleAtZero,
  SignatureMismatch,
  UnsupportedDimension,
  NotInvertible,
  OddElement,
  NotInGroup,
  BasisExpansionFailure,
  DimensionMismatch,
  NotSpacelike,
  NotElliptic,
  NotIsolated,
  NotFiniteOrder,
  AngleMatchFailure,
  AngleOutOfRange,
  OrbitSizeMismatch,
  NonClosingCycle,
  LiftMismatch,
  NotNormalizing,
  ClosureBudgetExceeded,
  NonTermination,
  NonIsolatedFixedPoint,
  NonRealTrace,
  NotUnitSign,
  NonIntegralCoefficient,
  CorruptCache,
  Internal,
};

inline const char* err_name(Err e) {
  switch (e) {
    case Err::SpecMismatch: return "SpecMismatch";
    case Err::DivisionByZero: return "DivisionByZero";
    case Err::NegativeRadicand: return "NegativeRadicand";
    case Err::AlreadySquare: return "AlreadySquare";
    case Err::UnsupportedDenominator: return "UnsupportedDenominator";
    case Err::PoleAtZero: return "PoleAtZero";
    case Err::SignatureMismatch: return "SignatureMismatch";
    case Err::UnsupportedDimension: return "UnsupportedDimension";
    case Err::NotInvertible: return "NotInvertible";
    case Err::OddElement: return "OddElement";
    case Err::NotInGroup: return "NotInGroup";
    case Err::BasisExpansionFailure: return "BasisExpansionFailure";
    case Err::DimensionMismatch: return "DimensionMismatch";
    case Err::NotSpacelike: return "NotSpacelike";
    case Err::NotElliptic: return "NotElliptic";
    case Err::NotIsolated: return "NotIsolated";
    case Err::NotFiniteOrder: return "NotFiniteOrder";
    case Err::AngleMatchFailure: return "AngleMatchFailure";
    case Err::AngleOutOfRange: return "AngleOutOfRange";
    case Err::OrbitSizeMismatch: return "OrbitSizeMismatch";
    case Err::NonClosingCycle: return "NonClosingCycle";
    case Err::LiftMismatch: return "LiftMismatch";
    case Err::NotNormalizing: return "NotNormalizing";
    case Err::ClosureBudgetExceeded: return "ClosureBudgetExceeded";
    case Err::NonTermination: return "NonTermination";
    case Err::NonIsolatedFixedPoint: return "NonIsolatedFixedPoint";
    case Err::NonRealTrace: return "NonRealTrace";
    case Err::NotUnitSign: return "NotUnitSign";
    case Err::NonIntegralCoefficient: return "NonIntegralCoefficient";
    case Err::CorruptCache: return "CorruptCache";
    case Err::Internal: return "Internal";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Err code, const std::string& what)
      : std::runtime_error(std::string(err_name(code)) + ": " + what), code_(code) {}
  Err code() const { return code_; }

 private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& what) { throw Error(code, what); }

inline void check(bool ok, Err code, const std::string& what) {
  if (!ok) fail(code, what);
}

}  // namespace hspin
