#pragma once

#include <random>

#include "weilzeta/polynomial.hpp"

// Polynomial arithmetic over F_p. Inputs are integer polynomials; every result
// has coefficients reduced into [0, p).
namespace weilzeta::fp {

ZPoly reduce(const ZPoly& a, const Int& p);
ZPoly add(const ZPoly& a, const ZPoly& b, const Int& p);
ZPoly sub(const ZPoly& a, const ZPoly& b, const Int& p);
ZPoly mul(const ZPoly& a, const ZPoly& b, const Int& p);
ZPoly scale(const ZPoly& a, const Int& s, const Int& p);
Int inverse(const Int& a, const Int& p);

/// Division with remainder; b must have a unit leading coefficient mod p.
std::pair<ZPoly, ZPoly> divmod(const ZPoly& a, const ZPoly& b, const Int& p);
ZPoly rem(const ZPoly& a, const ZPoly& b, const Int& p);
ZPoly make_monic(const ZPoly& a, const Int& p);
/// Monic gcd.
ZPoly gcd(ZPoly a, ZPoly b, const Int& p);
/// Extended Euclid: returns g = gcd with s*a + t*b = g (g monic).
ZPoly ext_gcd(const ZPoly& a, const ZPoly& b, const Int& p, ZPoly& s, ZPoly& t);
/// base^e mod modulus.
ZPoly powmod(const ZPoly& base, const Int& e, const ZPoly& modulus, const Int& p);

/// Rabin-style test: gcd(x^{p^i} - x, f) = 1 for i <= deg/2 and
/// x^{p^deg} = x mod f.
bool is_irreducible(const ZPoly& f, const Int& p);

/// Factorization of a square-free monic polynomial into monic irreducibles
/// (distinct-degree then equal-degree splitting). p must be odd.
std::vector<ZPoly> factor_squarefree(const ZPoly& f, const Int& p, std::mt19937_64& rng);

}  // namespace weilzeta::fp
