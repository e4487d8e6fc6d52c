#pragma once

#include <optional>
#include <string>
#include <vector>

#include "weilzeta/algebraic.hpp"
#include "weilzeta/linalg.hpp"

namespace weilzeta {

/// Non-negative primitive integer matrix. When `ell` is set the matrix is also
/// symmetric with determinant ell.
struct HeckeLikeMatrix {
  IntMatrix t;
  std::optional<Int> ell;
  std::size_t size() const { return t.size(); }
};

/// Validates shape, signs, primitivity (NotPrimitive) and the optional
/// determinant tag (InvalidArgument).
HeckeLikeMatrix make_hecke(IntMatrix t, std::optional<Int> ell = std::nullopt);

/// Element of the direct limit: v at level k, with (v, k) ~ (T v, k + 1).
struct DimElement {
  std::vector<Int> v;
  unsigned long k = 0;
};

struct DimensionGroup {
  HeckeLikeMatrix matrix;
  ZPoly charpoly;
  RealAlgebraic lambda;           // Perron-Frobenius eigenvalue, generator of its field
  std::vector<RealAlgebraic> w;   // w T = lambda w, w_1 = 1
};

/// Largest real root of f as the generator of Q(root). InvalidArgument when f has none.
RealAlgebraic largest_real_root(const ZPoly& f);

DimensionGroup build(const HeckeLikeMatrix& m);

/// <v, w> / lambda^k.
RealAlgebraic trace_value(const DimensionGroup& g, const DimElement& x);
bool equivalent(const DimensionGroup& g, const DimElement& x, const DimElement& y);
DimElement shift(const DimensionGroup& g, const DimElement& x);
DimElement shift_inverse(const DimensionGroup& g, const DimElement& x);

struct UnitDecomposition {
  RealAlgebraic lambda_unit;  // lambda / ell
  ZPoly minimal_polynomial;   // primitive integer form
  bool verified = false;      // lambda / ell is an algebraic unit
};
UnitDecomposition unit_decomposition(const DimensionGroup& g, const Int& ell);

/// Symmetric [[s, u], [u, t]] with s >= t >= 0, u >= 1, s + t = a, st - u^2 = ell.
/// Among solutions the one with smallest (s, u) wins. NotRepresentable otherwise.
HeckeLikeMatrix hecke_companion(const Int& a, const Int& ell);

/// lambda of g is the largest root of x^2 - a x + ell (2x2 matrices only).
bool frobenius_shift_matches_eigenvalue(const DimensionGroup& g, const Int& a, const Int& ell);

/// Whitespace-separated integer rows; '#' starts a comment.
IntMatrix parse_matrix(const std::string& text);
IntMatrix load_matrix(const std::string& path);

}  // namespace weilzeta
