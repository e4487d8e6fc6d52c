#pragma once

#include <optional>
#include <vector>

#include "weilzeta/polynomial.hpp"

namespace weilzeta {

/// Truncated power series c_0 + c_1 t + ... + c_M t^M.
struct PowerSeriesQ {
  std::vector<Rat> coeffs;
  std::size_t order() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
};

/// num/den with integer coefficients, both with constant term 1, coprime.
struct RationalFunctionQ {
  ZPoly num;
  ZPoly den;
};

bool operator==(const RationalFunctionQ& a, const RationalFunctionQ& b);
std::string to_string(const RationalFunctionQ& z);

/// Weight-graded factors P_0..P_{2n} of a zeta function.
struct WeilFactorization {
  Int q;
  unsigned n = 0;
  std::vector<ZPoly> factors;   // factors[i] = P_i, length 2n+1
  std::vector<double> weights;  // largest |weight - i| seen for each P_i
  long chi = 0;
  int sign = 0;  // filled in by functional_equation_check; 0 = not computed or undetermined
};

/// exp(sum N_m t^m / m) truncated at order counts.size().
PowerSeriesQ zeta_series(const std::vector<Int>& counts);

/// Series expansion of num/den through t^order.
PowerSeriesQ expand(const RationalFunctionQ& z, std::size_t order);

/// Normalize num/den: cancel the gcd, scale to den(0) = 1, require integrality.
RationalFunctionQ normalize(const QPoly& num, const QPoly& den);

RationalFunctionQ pade_reconstruct(const PowerSeriesQ& s, unsigned num_deg, unsigned den_deg);

/// Smallest total degree D < order with an integral Padé fit that reproduces
/// every coefficient of s. Numerator degrees are tried from 0 up to D.
std::optional<RationalFunctionQ> fit_rational(const PowerSeriesQ& s);

enum class NumeratorMode { Full, Symmetric };

/// P_1 of a genus-g curve from point counts via Newton's identities.
ZPoly curve_numerator(const std::vector<Int>& counts, const Int& q, unsigned g,
                      NumeratorMode mode = NumeratorMode::Full);

/// Verify Z(q^-n t^-1) = sign q^{n chi/2} t^chi Z(t). Returns +1 or -1, or 0
/// when n*chi is odd and only the squared identity was checked.
int functional_equation_check(const RationalFunctionQ& z, const Int& q, unsigned n, long chi);

WeilFactorization weight_split(const RationalFunctionQ& z, const Int& q, unsigned n, double tol = 0.25);

struct RhReport {
  double max_modulus_deviation = 0;
  bool reciprocal_ok = false;
  bool pass = false;
};

RhReport rh_check(const ZPoly& p, const Int& q, unsigned i, double tol);

/// deg P_i == expected[i] for each i.
std::vector<bool> betti_check(const WeilFactorization& f, const std::vector<long>& expected);

/// Coefficient of t^m in t Z'(t) / Z(t).
Int point_count_from_zeta(const RationalFunctionQ& z, unsigned m);

}  // namespace weilzeta
