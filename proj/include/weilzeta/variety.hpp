#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "weilzeta/ffield.hpp"

namespace weilzeta {

/// Sparse multivariate polynomial over F_p in canonical form: terms keyed by
/// exponent vector (lexicographically sorted by std::map), coefficients in
/// [1, p).
class MPoly {
 public:
  using Exponents = std::vector<unsigned>;

  MPoly() = default;
  MPoly(std::size_t nvars, Int p) : nvars_(nvars), p_(std::move(p)) {}

  static MPoly constant(std::size_t nvars, const Int& p, const Int& c);
  static MPoly variable(std::size_t nvars, const Int& p, std::size_t index);

  std::size_t num_vars() const { return nvars_; }
  const Int& prime() const { return p_; }
  const std::map<Exponents, Int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Homogeneous of a single total degree (the zero polynomial counts).
  bool is_homogeneous() const;
  unsigned total_degree() const;

  void add_term(const Exponents& e, const Int& c);

  MPoly operator-() const;
  friend MPoly operator+(const MPoly& a, const MPoly& b);
  friend MPoly operator-(const MPoly& a, const MPoly& b);
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  MPoly pow(unsigned e) const;
  friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_ && a.p_ == b.p_; }

  FFElement eval(const std::vector<FFElement>& point, const FiniteField& field) const;

 private:
  std::size_t nvars_ = 0;
  Int p_ = 2;
  std::map<Exponents, Int> terms_;
};

std::string to_string(const MPoly& f);

enum class Ambient { Affine, Projective };

struct VarietySpec {
  Int p;
  Ambient ambient = Ambient::Projective;
  unsigned dim = 0;     // N of A^N or P^N
  unsigned vardim = 0;  // declared dimension n of the variety
  std::vector<MPoly> polys;

  std::size_t num_vars() const { return ambient == Ambient::Projective ? dim + 1 : dim; }
};

/// Validates primality, variable counts and projective homogeneity.
VarietySpec make_variety(const Int& p, Ambient ambient, unsigned dim, unsigned vardim, std::vector<MPoly> polys);

/// Text format:
///   field p=<prime>
///   ambient projective|affine dim=<N> vardim=<n>
///   poly <expression in X0..X_k with + - * ^ ( ) and integer literals>
/// Blank lines and lines starting with '#' are ignored.
VarietySpec parse_variety(std::string_view text);
VarietySpec load_variety(const std::string& path);

/// The projective Weierstrass model Y^2 Z = X^3 + A X Z^2 + B Z^3 (X0=X, X1=Y, X2=Z).
VarietySpec weierstrass_curve(const Int& a, const Int& b, const Int& p);

struct PointCountSeries {
  Int q;
  std::vector<Int> counts;  // counts[m-1] = N_m
};

/// Number of points of the ambient space over F_{p^m}.
Int ambient_size(const VarietySpec& v, unsigned m);

/// Exact number of common zeros over F_{p^m}; projective points are visited
/// once each through normalized representatives.
Int count_points(const VarietySpec& v, unsigned m, const Int& budget = kDefaultBudget);
PointCountSeries count_series(const VarietySpec& v, unsigned m_max, const Int& budget = kDefaultBudget);

/// |E(F_p)| for y^2 = x^3 + A x + B via the quadratic character, p > 3.
Int ec_count(const Int& a, const Int& b, const Int& p);

}  // namespace weilzeta
