#pragma once

#include <string>
#include <utility>
#include <vector>

#include "weilzeta/common.hpp"

namespace weilzeta {

/// Element re + im*i of Z[i].
struct GaussianInt {
  Int re;
  Int im;

  Int norm() const { return re * re + im * im; }
  GaussianInt conj() const { return {re, -im}; }
  friend GaussianInt operator*(const GaussianInt& a, const GaussianInt& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussianInt operator+(const GaussianInt& a, const GaussianInt& b) { return {a.re + b.re, a.im + b.im}; }
  friend bool operator==(const GaussianInt& a, const GaussianInt& b) = default;
};

/// Roots of x^2 - a x + q, stored as center +- half_coeff * sqrt(|disc|),
/// with the square root imaginary when disc < 0.
struct FrobeniusData {
  Int a;
  Int q;
  Int disc;        // a^2 - 4q
  Rat center;      // a/2
  Rat half_coeff;  // 1/2; lambda_1 takes +, lambda_2 takes -

  Rat eigen_sum() const { return 2 * center; }
  /// lambda_1 * lambda_2 = center^2 - half_coeff^2 * disc, exact in both branches.
  Rat eigen_product() const { return center * center - half_coeff * half_coeff * Rat(disc); }
  /// |lambda|^2 when disc < 0, i.e. center^2 + half_coeff^2 |disc|.
  Rat squared_modulus() const { return center * center + half_coeff * half_coeff * Rat(abs(disc)); }
  std::string eigenvalue_string(int which) const;
};

Int frobenius_trace(const Int& a, const Int& b, const Int& p);

/// (x, y) with x^2 + y^2 = p for a prime p = 1 mod 4 (Cornacchia), x >= y > 0.
std::pair<Int, Int> two_squares(const Int& p);

/// Trace of Frobenius of y^2 = x^3 - x via the Gaussian prime over p.
Int grossencharacter_trace_d1(const Int& p);

FrobeniusData frobenius_eigenvalues(const Int& a, const Int& q);

/// 1 - a + q after the Hasse check.
Int count_via_character(const Int& a, const Int& q);

/// N_1..N_m from the trace: N_m = q^m + 1 - s_m, s_m = a s_{m-1} - q s_{m-2}.
std::vector<Int> counts_from_trace(const Int& a, const Int& q, unsigned m_max);

}  // namespace weilzeta
