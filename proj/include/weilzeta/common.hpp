#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace weilzeta {

using Int = mpz_class;
using Rat = mpq_class;

/// Every failure raised by the library carries one of these tags; the CLI maps
/// them onto exit codes and prints the tag name verbatim.
enum class ErrorKind {
  InvalidPrime,
  InvalidDegree,
  FieldMismatch,
  DivisionByZero,
  EnumerationBudgetExceeded,
  NotHomogeneous,
  ParseError,
  SingularCurve,
  UnsupportedCharacteristic,
  EmptySeries,
  InsufficientPrecision,
  NoRationalFit,
  NotIntegral,
  FunctionalEquationViolated,
  MixedWeightFactor,
  WeightOutOfRange,
  WeightParityMismatch,
  NotNormalized,
  DimensionMismatch,
  HasseViolation,
  InvalidArgument,
  InvalidField,
  NotEndomorphism,
  DependentGenerators,
  NotPrimitive,
  DegenerateSpectrum,
  NotRepresentable,
  InternalError,
};

std::string_view error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + detail),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& detail) {
  throw Error(kind, detail);
}

// Small helpers shared by most modules.
Int int_pow(const Int& base, unsigned long exp);
Rat rat_pow(const Rat& base, long exp);
bool is_integer(const Rat& r);
/// Deterministic primality (BPSW + trial division via GMP, exact for the sizes
/// we encounter; GMP reports "probably prime" only above 2^64).
bool is_prime(const Int& n);
std::string to_string(const Int& v);
std::string to_string(const Rat& v);

}  // namespace weilzeta
