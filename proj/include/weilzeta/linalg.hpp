#pragma once

#include <optional>
#include <vector>

#include "weilzeta/polynomial.hpp"

namespace weilzeta {

using IntMatrix = std::vector<std::vector<Int>>;
using RatMatrix = std::vector<std::vector<Rat>>;

inline bool is_zero(const Rat& v) { return v == 0; }
inline bool is_zero(const Int& v) { return v == 0; }
inline Rat inverse(const Rat& v) {
  if (v == 0) fail(ErrorKind::DivisionByZero, "inverse of zero");
  return 1 / v;
}

IntMatrix identity_matrix(std::size_t n);
IntMatrix matmul(const IntMatrix& a, const IntMatrix& b);
std::vector<Int> matvec(const IntMatrix& a, const std::vector<Int>& v);
IntMatrix transpose(const IntMatrix& a);
Int trace(const IntMatrix& a);
/// Fraction-free (Bareiss) determinant.
Int determinant(const IntMatrix& a);
/// Monic characteristic polynomial det(xI - A).
ZPoly characteristic_polynomial(const IntMatrix& a);
QPoly characteristic_polynomial(const RatMatrix& a);

std::size_t rank(RatMatrix a);

/// Row echelon form over any exact field-like scalar (Rat, RealAlgebraic).
/// Returns the pivot columns; `a` is reduced in place to reduced row echelon form.
template <class T>
std::vector<std::size_t> row_reduce(std::vector<std::vector<T>>& a) {
  std::vector<std::size_t> pivots;
  if (a.empty()) return pivots;
  const std::size_t rows = a.size(), cols = a[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pr = r;
    while (pr < rows && is_zero(a[pr][c])) ++pr;
    if (pr == rows) continue;
    std::swap(a[pr], a[r]);
    const T inv = inverse(a[r][c]);
    for (auto& v : a[r]) v = v * inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || is_zero(a[i][c])) continue;
      const T f = a[i][c];
      for (std::size_t j = 0; j < cols; ++j) a[i][j] = a[i][j] - f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

/// Basis of the right null space {x : A x = 0}.
template <class T>
std::vector<std::vector<T>> nullspace(std::vector<std::vector<T>> a, const T& zero, const T& one) {
  std::vector<std::vector<T>> basis;
  if (a.empty()) return basis;
  const std::size_t cols = a[0].size();
  const auto pivots = row_reduce(a);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<T> x(cols, zero);
    x[free] = one;
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = zero - a[r][free];
    basis.push_back(std::move(x));
  }
  return basis;
}

/// Some solution of A x = b over Q (free variables zero), or nullopt.
std::optional<std::vector<Rat>> solve(const RatMatrix& a, const std::vector<Rat>& b);

/// Nonzero rows of the row Hermite normal form: a canonical basis of the
/// Z-module spanned by `rows`.
IntMatrix hermite_basis(IntMatrix rows);
/// Basis (as rows) of {x in Z^k : A x = 0} for an n-by-k integer matrix A.
IntMatrix integer_kernel(const IntMatrix& a, std::size_t cols);

/// Wielandt bound: a non-negative square matrix is primitive iff its
/// (b-1)^2+1 power is entrywise positive.
bool is_primitive(const IntMatrix& t);

std::string to_string(const IntMatrix& m);

}  // namespace weilzeta
