#include "weilzeta/dimgroup.hpp"

#include <fstream>
#include <sstream>

#include "weilzeta/realroots.hpp"

namespace weilzeta {

HeckeLikeMatrix make_hecke(IntMatrix t, std::optional<Int> ell) {
  const std::size_t b = t.size();
  if (b == 0) fail(ErrorKind::DimensionMismatch, "empty matrix");
  for (const auto& row : t)
    if (row.size() != b) fail(ErrorKind::DimensionMismatch, "matrix is not square");
  // is_primitive rejects negative entries itself.
  if (!is_primitive(t)) fail(ErrorKind::NotPrimitive, "no power of " + to_string(t) + " is entrywise positive");
  if (ell) {
    if (t != transpose(t)) fail(ErrorKind::InvalidArgument, "matrix is not symmetric");
    const Int det = determinant(t);
    if (det != *ell) fail(ErrorKind::InvalidArgument, "det T = " + to_string(det) + ", expected " + to_string(*ell));
  }
  return {std::move(t), std::move(ell)};
}

RealAlgebraic largest_real_root(const ZPoly& f) {
  if (f.degree() < 1) fail(ErrorKind::InvalidArgument, "constant polynomial has no roots");
  const auto fac = factor(f);
  ZPoly sqfree(std::vector<Int>{Int(1)});
  for (const auto& [p, e] : fac.factors) sqfree = sqfree * p;
  const auto roots = isolate_real_roots(sqfree);
  if (roots.empty()) fail(ErrorKind::InvalidArgument, to_string(f, "x") + " has no real roots");
  const RatInterval top = roots.back();
  for (const auto& [p, e] : fac.factors) {
    if (SturmSequence(p).count(top) != 1) continue;
    ZPoly monic = p;
    if (monic.leading() < 0) monic = monic * ZPoly(std::vector<Int>{Int(-1)});
    if (monic.leading() != 1) fail(ErrorKind::InvalidArgument, to_string(f, "x") + " is not monic");
    return RealAlgebraic::generator(NumberField::make(monic, top.lo, top.hi));
  }
  fail(ErrorKind::InternalError, "largest root not owned by any factor");
}

DimensionGroup build(const HeckeLikeMatrix& m) {
  const ZPoly cp = characteristic_polynomial(m.t);
  RealAlgebraic lambda = largest_real_root(cp);
  const FieldPtr f = lambda.field();
  const auto one = RealAlgebraic::rational(f, Rat(1));
  if ((lambda - one).sign() <= 0)
    fail(ErrorKind::DegenerateSpectrum, "Perron-Frobenius eigenvalue " + lambda.decimal(12) + " is not > 1");

  // Left eigenvector: (T^T - lambda) w = 0.
  const std::size_t b = m.size();
  std::vector<std::vector<RealAlgebraic>> a(b, std::vector<RealAlgebraic>(b, RealAlgebraic::rational(f, Rat(0))));
  for (std::size_t i = 0; i < b; ++i)
    for (std::size_t j = 0; j < b; ++j) {
      a[i][j] = RealAlgebraic::rational(f, Rat(m.t[j][i]));
      if (i == j) a[i][j] = a[i][j] - lambda;
    }
  const auto ns = nullspace(a, RealAlgebraic::rational(f, Rat(0)), one);
  if (ns.size() != 1) fail(ErrorKind::InternalError, "Perron-Frobenius eigenspace is not one-dimensional");
  if (ns[0][0].is_zero()) fail(ErrorKind::InternalError, "Perron-Frobenius vector has a zero entry");
  const RealAlgebraic scale = ns[0][0].inverse();
  std::vector<RealAlgebraic> w;
  for (const auto& x : ns[0]) w.push_back(x * scale);
  return {m, cp, std::move(lambda), std::move(w)};
}

RealAlgebraic trace_value(const DimensionGroup& g, const DimElement& x) {
  if (x.v.size() != g.matrix.size()) fail(ErrorKind::DimensionMismatch, "vector length differs from matrix size");
  RealAlgebraic s = RealAlgebraic::rational(g.lambda.field(), Rat(0));
  for (std::size_t i = 0; i < x.v.size(); ++i)
    if (x.v[i] != 0) s = s + g.w[i] * Rat(x.v[i]);
  if (x.k == 0 || s.is_zero()) return s;
  return s * g.lambda.pow(-static_cast<long>(x.k));
}

namespace {

std::vector<Int> push(const IntMatrix& t, std::vector<Int> v, unsigned long steps) {
  for (unsigned long i = 0; i < steps; ++i) v = matvec(t, v);
  return v;
}

}  // namespace

bool equivalent(const DimensionGroup& g, const DimElement& x, const DimElement& y) {
  const auto& t = g.matrix.t;
  unsigned long m = std::max(x.k, y.k);
  auto a = push(t, x.v, m - x.k), b = push(t, y.v, m - y.k);
  if (a == b) return true;
  if (determinant(t) != 0) return false;  // T injective: one level decides
  // Singular T: kernels stabilize within b more steps.
  for (std::size_t i = 0; i < g.matrix.size(); ++i) {
    a = matvec(t, a);
    b = matvec(t, b);
    if (a == b) return true;
  }
  return false;
}

DimElement shift(const DimensionGroup& g, const DimElement& x) { return {matvec(g.matrix.t, x.v), x.k}; }

DimElement shift_inverse(const DimensionGroup&, const DimElement& x) { return {x.v, x.k + 1}; }

UnitDecomposition unit_decomposition(const DimensionGroup& g, const Int& ell) {
  if (ell < 2) fail(ErrorKind::InvalidArgument, "ell must be at least 2");
  const RealAlgebraic u = g.lambda * Rat(Int(1), ell);
  return {u, primitive_integer(u.minimal_polynomial()), u.is_unit()};
}

HeckeLikeMatrix hecke_companion(const Int& a, const Int& ell) {
  if (!is_prime(ell)) fail(ErrorKind::InvalidPrime, to_string(ell) + " is not prime");
  if (a < 0) fail(ErrorKind::NotRepresentable, "a = " + to_string(a) + " < 0 forces a negative diagonal entry");
  if (a * a < 4 * ell)
    fail(ErrorKind::NotRepresentable,
         "x^2 - " + to_string(a) + "x + " + to_string(ell) + " has complex roots; no real symmetric matrix has them");
  for (Int s = (a + 1) / 2; s <= a; ++s) {
    const Int t = a - s;
    const Int u2 = s * t - ell;
    if (u2 < 1) continue;
    Int u;
    mpz_sqrt(u.get_mpz_t(), u2.get_mpz_t());
    if (u * u != u2 || u > a) continue;
    return make_hecke({{s, u}, {u, t}}, ell);
  }
  fail(ErrorKind::NotRepresentable,
       "no symmetric non-negative matrix with trace " + to_string(a) + " and determinant " + to_string(ell));
}

bool frobenius_shift_matches_eigenvalue(const DimensionGroup& g, const Int& a, const Int& ell) {
  if (g.matrix.size() != 2) return false;
  const ZPoly target(std::vector<Int>{ell, -a, Int(1)});
  RealAlgebraic r = g.lambda;
  try {
    r = largest_real_root(target);
  } catch (const Error&) {
    return false;  // complex spectrum
  }
  return g.lambda.field()->same_as(*r.field());
}

IntMatrix parse_matrix(const std::string& text) {
  IntMatrix m;
  std::istringstream in(text);
  std::string line;
  for (int lineno = 1; std::getline(in, line); ++lineno) {
    if (const auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ls(line);
    std::vector<Int> row;
    std::string tok;
    while (ls >> tok) {
      Int v;
      if (v.set_str(tok, 10) != 0)
        fail(ErrorKind::ParseError, "line " + std::to_string(lineno) + ": '" + tok + "' is not an integer");
      row.push_back(v);
    }
    if (row.empty()) continue;
    if (!m.empty() && row.size() != m.front().size())
      fail(ErrorKind::ParseError, "line " + std::to_string(lineno) + ": row has " + std::to_string(row.size()) +
                                      " entries, expected " + std::to_string(m.front().size()));
    m.push_back(std::move(row));
  }
  if (m.empty()) fail(ErrorKind::ParseError, "no matrix rows");
  if (m.size() != m.front().size())
    fail(ErrorKind::ParseError, std::to_string(m.size()) + " rows of length " + std::to_string(m.front().size()) +
                                    "; matrix must be square");
  return m;
}

IntMatrix load_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::InvalidArgument, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_matrix(ss.str());
}

}  // namespace weilzeta
