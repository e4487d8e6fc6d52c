#pragma once

#include <optional>
#include <string>
#include <vector>

#include "weilzeta/algebraic.hpp"
#include "weilzeta/linalg.hpp"

namespace weilzeta {

/// Z g_1 + ... + Z g_b inside one real number field, with g_1 = 1.
struct PseudoLattice {
  FieldPtr field;
  std::vector<RealAlgebraic> gens;
  std::size_t rank() const { return gens.size(); }
};

/// Checks a shared field, g_1 = 1 (NotNormalized) and rational independence
/// (DependentGenerators).
PseudoLattice make_lattice(std::vector<RealAlgebraic> gens);

/// Rational coordinates of x in the generators, or nullopt when x is outside their span.
std::optional<std::vector<Rat>> lattice_coordinates(const PseudoLattice& l, const RealAlgebraic& x);
bool contains(const PseudoLattice& l, const RealAlgebraic& x);
bool is_endomorphism(const PseudoLattice& l, const RealAlgebraic& alpha);
/// alpha g_j = sum_k M[k][j] g_k.
IntMatrix endo_matrix(const PseudoLattice& l, const RealAlgebraic& alpha);

struct EndoRing {
  std::size_t rank = 0;
  IntMatrix coords;                   // basis as integer vectors in the generators (Hermite form)
  std::vector<RealAlgebraic> basis;   // the same elements as field numbers
};

EndoRing endo_ring(const PseudoLattice& l);

struct CurveCohomology {
  PseudoLattice h0, h1, h2;
};

/// H^0 = H^2 = Z and H^1 = Z + Z theta_1 + ... + Z theta_{2g-1}.
CurveCohomology curve_trace_cohomology(unsigned genus, const std::vector<RealAlgebraic>& thetas);

/// 1 + q - trace(endo_matrix(L, omega)).
Int point_count_from_frobenius(const PseudoLattice& l, const RealAlgebraic& omega, const Int& q);
/// Same count for a Frobenius given directly as an integer matrix.
Int point_count_from_frobenius(const IntMatrix& omega, const Int& q);
/// [[0, -q], [1, a]], characteristic polynomial x^2 - a x + q.
IntMatrix frobenius_companion(const Int& a, const Int& q);

/// Integer combination of the generators with value in (0, eps), built from
/// continued-fraction convergents of g_2. Requires rank >= 2.
struct DensityWitness {
  std::vector<Int> coeffs;
  RealAlgebraic value;
};
DensityWitness density_witness(const PseudoLattice& l, const Rat& eps);

/// Lattice text file: field minpoly=..., root in [a, b], gen ..., optional endo ... lines.
struct LatticeFile {
  PseudoLattice lattice;
  std::vector<RealAlgebraic> requested;  // from endo lines
};
LatticeFile parse_lattice(const std::string& text);
LatticeFile load_lattice(const std::string& path);

}  // namespace weilzeta
