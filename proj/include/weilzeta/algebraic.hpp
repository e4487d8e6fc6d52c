#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "weilzeta/linalg.hpp"
#include "weilzeta/polynomial.hpp"
#include "weilzeta/realroots.hpp"

namespace weilzeta {

/// Q(theta) for one real root theta of a monic irreducible integer polynomial,
/// selected by an isolating interval.
class NumberField {
 public:
  /// Validates monic, irreducible, and that `root` isolates exactly one real
  /// root (closed interval [lo, hi]). Throws InvalidField otherwise.
  static std::shared_ptr<const NumberField> make(const ZPoly& minpoly, const Rat& lo, const Rat& hi);

  std::size_t degree() const { return static_cast<std::size_t>(minpoly_.degree()); }
  const ZPoly& minpoly() const { return minpoly_; }
  /// Current isolating interval (lo, hi] of theta, narrowed to below `width`.
  RatInterval interval(const Rat& width) const;
  RatInterval interval() const;
  /// theta itself when it is rational (degree 1).
  bool is_rational() const { return minpoly_.degree() == 1; }

  /// Same polynomial and same selected root.
  bool same_as(const NumberField& other) const;

  NumberField(ZPoly minpoly, RatInterval iv);

 private:
  ZPoly minpoly_;
  SturmSequence sturm_;
  mutable std::mutex mu_;
  mutable RatInterval iv_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

/// Element of a NumberField in the power basis 1, theta, ..., theta^{d-1}.
class RealAlgebraic {
 public:
  RealAlgebraic(FieldPtr field, std::vector<Rat> coords);
  static RealAlgebraic rational(FieldPtr field, const Rat& v);
  static RealAlgebraic generator(FieldPtr field);

  const FieldPtr& field() const { return field_; }
  const std::vector<Rat>& coords() const { return c_; }
  bool is_zero() const;
  bool is_rational() const;

  /// -1, 0 or +1, decided exactly.
  int sign() const;

  RealAlgebraic operator-() const;
  friend RealAlgebraic operator+(const RealAlgebraic& a, const RealAlgebraic& b);
  friend RealAlgebraic operator-(const RealAlgebraic& a, const RealAlgebraic& b);
  friend RealAlgebraic operator*(const RealAlgebraic& a, const RealAlgebraic& b);
  friend RealAlgebraic operator*(const RealAlgebraic& a, const Rat& s);
  friend RealAlgebraic operator/(const RealAlgebraic& a, const RealAlgebraic& b);
  friend bool operator==(const RealAlgebraic& a, const RealAlgebraic& b);
  friend bool operator<(const RealAlgebraic& a, const RealAlgebraic& b) { return (b - a).sign() > 0; }
  friend bool operator>(const RealAlgebraic& a, const RealAlgebraic& b) { return b < a; }

  RealAlgebraic inverse() const;
  RealAlgebraic pow(long e) const;

  /// Matrix of multiplication by this element on the power basis (columns are images).
  RatMatrix multiplication_matrix() const;
  /// Monic minimal polynomial over Q.
  QPoly minimal_polynomial() const;
  bool is_algebraic_integer() const;
  bool is_unit() const;
  /// Rational approximation within `tol` of the value.
  Rat approximate(const Rat& tol) const;
  double to_double() const;
  /// Decimal rendering with `digits` significant digits (advisory only).
  std::string decimal(int digits = 30) const;

 private:
  void require_same_field(const RealAlgebraic& o) const;
  FieldPtr field_;
  std::vector<Rat> c_;
};

/// Coordinate vector like "[1, -1/2]".
std::string coords_string(const RealAlgebraic& a);

// Scalar hooks for the generic elimination in linalg.hpp.
inline bool is_zero(const RealAlgebraic& v) { return v.is_zero(); }
inline RealAlgebraic inverse(const RealAlgebraic& v) { return v.inverse(); }

}  // namespace weilzeta
