#include "weilzeta/numeric_roots.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

namespace weilzeta {
namespace {

using cld = std::complex<long double>;

cld horner(const std::vector<long double>& c, cld z, cld* deriv) {
  cld v = 0, d = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    d = d * z + v;
    v = v * z + *it;
  }
  if (deriv) *deriv = d;
  return v;
}

}  // namespace

std::vector<std::complex<double>> complex_roots(const ZPoly& p) {
  std::vector<std::complex<double>> out;
  const int n = p.degree();
  if (n < 1) return out;
  std::vector<long double> c(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) c[i] = static_cast<long double>(p.coeffs()[i].get_d());

  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
  const double lead = static_cast<double>(c.back());
  for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) companion(i, n - 1) = -static_cast<double>(c[static_cast<std::size_t>(i)]) / lead;
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  const auto ev = solver.eigenvalues();

  for (int i = 0; i < n; ++i) {
    cld z(ev(i).real(), ev(i).imag());
    for (int it = 0; it < 50; ++it) {
      cld d;
      const cld v = horner(c, z, &d);
      if (std::abs(d) == 0) break;
      const cld step = v / d;
      z -= step;
      if (std::abs(step) <= 1e-30L * std::max<long double>(1, std::abs(z))) break;
    }
    out.emplace_back(static_cast<double>(z.real()), static_cast<double>(z.imag()));
  }
  std::sort(out.begin(), out.end(), [](auto a, auto b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return out;
}

double scaled_residual(const ZPoly& p, std::complex<double> z) {
  std::vector<long double> c(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) c[i] = static_cast<long double>(p.coeffs()[i].get_d());
  const cld zz(z.real(), z.imag());
  long double scale = 0, pow = 1;
  for (auto v : c) {
    scale += std::fabs(v) * pow;
    pow *= std::abs(zz);
  }
  if (scale == 0) return 0;
  return static_cast<double>(std::abs(horner(c, zz, nullptr)) / scale);
}

}  // namespace weilzeta
