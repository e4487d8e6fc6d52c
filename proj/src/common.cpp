#include "weilzeta/common.hpp"

namespace weilzeta {

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidPrime: return "InvalidPrime";
    case ErrorKind::InvalidDegree: return "InvalidDegree";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::EnumerationBudgetExceeded: return "EnumerationBudgetExceeded";
    case ErrorKind::NotHomogeneous: return "NotHomogeneous";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::SingularCurve: return "SingularCurve";
    case ErrorKind::UnsupportedCharacteristic: return "UnsupportedCharacteristic";
    case ErrorKind::EmptySeries: return "EmptySeries";
    case ErrorKind::InsufficientPrecision: return "InsufficientPrecision";
    case ErrorKind::NoRationalFit: return "NoRationalFit";
    case ErrorKind::NotIntegral: return "NotIntegral";
    case ErrorKind::FunctionalEquationViolated: return "FunctionalEquationViolated";
    case ErrorKind::MixedWeightFactor: return "MixedWeightFactor";
    case ErrorKind::WeightOutOfRange: return "WeightOutOfRange";
    case ErrorKind::WeightParityMismatch: return "WeightParityMismatch";
    case ErrorKind::NotNormalized: return "NotNormalized";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::HasseViolation: return "HasseViolation";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::InvalidField: return "InvalidField";
    case ErrorKind::NotEndomorphism: return "NotEndomorphism";
    case ErrorKind::DependentGenerators: return "DependentGenerators";
    case ErrorKind::NotPrimitive: return "NotPrimitive";
    case ErrorKind::DegenerateSpectrum: return "DegenerateSpectrum";
    case ErrorKind::NotRepresentable: return "NotRepresentable";
    case ErrorKind::InternalError: return "InternalError";
  }
  return "Unknown";
}

Int int_pow(const Int& base, unsigned long exp) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

Rat rat_pow(const Rat& base, long exp) {
  if (exp < 0) {
    if (base == 0) fail(ErrorKind::DivisionByZero, "0 raised to a negative power");
    return rat_pow(1 / base, -exp);
  }
  Rat r(int_pow(base.get_num(), static_cast<unsigned long>(exp)),
        int_pow(base.get_den(), static_cast<unsigned long>(exp)));
  r.canonicalize();
  return r;
}

bool is_integer(const Rat& r) { return r.get_den() == 1; }

bool is_prime(const Int& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

std::string to_string(const Int& v) { return v.get_str(); }

std::string to_string(const Rat& v) {
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

}  // namespace weilzeta
