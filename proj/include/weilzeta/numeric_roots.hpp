#pragma once

#include <complex>
#include <vector>

#include "weilzeta/polynomial.hpp"

namespace weilzeta {

/// All complex roots of p (with multiplicity), from the companion matrix
/// eigenvalues followed by Newton polishing in extended precision.
std::vector<std::complex<double>> complex_roots(const ZPoly& p);

/// |p(z)| / sum_j |a_j| |z|^j, the scaled residual used to certify a root.
double scaled_residual(const ZPoly& p, std::complex<double> z);

}  // namespace weilzeta
