#include "weilzeta/pseudolattice.hpp"

#include <fstream>
#include <sstream>

namespace weilzeta {

namespace {

RatMatrix generator_matrix(const PseudoLattice& l) {
  const std::size_t d = l.field->degree(), b = l.rank();
  RatMatrix g(d, std::vector<Rat>(b));
  for (std::size_t j = 0; j < b; ++j)
    for (std::size_t r = 0; r < d; ++r) g[r][j] = l.gens[j].coords()[r];
  return g;
}

void require_field(const PseudoLattice& l, const RealAlgebraic& x) {
  if (x.field() != l.field && !x.field()->same_as(*l.field))
    fail(ErrorKind::FieldMismatch, "element does not live in the lattice's field");
}

RealAlgebraic combine(const PseudoLattice& l, const std::vector<Int>& c) {
  RealAlgebraic acc = RealAlgebraic::rational(l.field, Rat(0));
  for (std::size_t j = 0; j < c.size(); ++j)
    if (c[j] != 0) acc = acc + l.gens[j] * Rat(c[j]);
  return acc;
}

Int floor_of(const RealAlgebraic& x) {
  const Rat approx = x.approximate(Rat(1, 4));
  Int a;
  mpz_fdiv_q(a.get_mpz_t(), approx.get_num_mpz_t(), approx.get_den_mpz_t());
  const auto at = [&](const Int& v) { return x - RealAlgebraic::rational(x.field(), Rat(v)); };
  while (at(a).sign() < 0) --a;
  while (at(a + 1).sign() >= 0) ++a;
  return a;
}

[[noreturn]] void parse_error(std::size_t line, const std::string& msg) {
  fail(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + msg);
}

Rat parse_rational(const std::string& tok, std::size_t line) {
  Rat r;
  if (tok.empty() || r.set_str(tok, 10) != 0 || r.get_den() == 0) parse_error(line, "bad number '" + tok + "'");
  r.canonicalize();
  return r;
}

std::vector<std::string> split_numbers(std::string s) {
  for (char& ch : s)
    if (ch == ',' || ch == '[' || ch == ']' || ch == '(' || ch == ')') ch = ' ';
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

}  // namespace

PseudoLattice make_lattice(std::vector<RealAlgebraic> gens) {
  if (gens.empty()) fail(ErrorKind::InvalidArgument, "a lattice needs at least one generator");
  PseudoLattice l{gens[0].field(), std::move(gens)};
  for (const auto& g : l.gens) require_field(l, g);
  if (!(l.gens[0] == RealAlgebraic::rational(l.field, Rat(1))))
    fail(ErrorKind::NotNormalized, "first generator must be 1, got " + coords_string(l.gens[0]));
  if (rank(generator_matrix(l)) != l.rank())
    fail(ErrorKind::DependentGenerators, std::to_string(l.rank()) + " generators are dependent over Q");
  return l;
}

std::optional<std::vector<Rat>> lattice_coordinates(const PseudoLattice& l, const RealAlgebraic& x) {
  require_field(l, x);
  return solve(generator_matrix(l), x.coords());
}

bool contains(const PseudoLattice& l, const RealAlgebraic& x) {
  const auto c = lattice_coordinates(l, x);
  if (!c) return false;
  for (const auto& v : *c)
    if (!is_integer(v)) return false;
  return true;
}

bool is_endomorphism(const PseudoLattice& l, const RealAlgebraic& alpha) {
  require_field(l, alpha);
  for (const auto& g : l.gens)
    if (!contains(l, alpha * g)) return false;
  return true;
}

IntMatrix endo_matrix(const PseudoLattice& l, const RealAlgebraic& alpha) {
  require_field(l, alpha);
  const std::size_t b = l.rank();
  IntMatrix m(b, std::vector<Int>(b));
  for (std::size_t j = 0; j < b; ++j) {
    const auto c = lattice_coordinates(l, alpha * l.gens[j]);
    if (!c) fail(ErrorKind::NotEndomorphism, coords_string(alpha) + " maps generator " + std::to_string(j + 1) + " out of the span");
    for (std::size_t k = 0; k < b; ++k) {
      if (!is_integer((*c)[k]))
        fail(ErrorKind::NotEndomorphism, coords_string(alpha) + " maps generator " + std::to_string(j + 1) + " outside the lattice");
      m[k][j] = (*c)[k].get_num();
    }
  }
  return m;
}

EndoRing endo_ring(const PseudoLattice& l) {
  // alpha = alpha * g_1 lies in L, so alpha = sum x_j g_j with x integral. The
  // unknowns are x and the integer coordinates c_i of alpha g_i:
  //   sum_j x_j coords(g_j g_i) - G c_i = 0   for every i.
  const std::size_t b = l.rank(), d = l.field->degree(), n = b + b * b;
  const RatMatrix g = generator_matrix(l);
  IntMatrix system;
  for (std::size_t i = 0; i < b; ++i) {
    std::vector<std::vector<Rat>> prod(b);
    for (std::size_t j = 0; j < b; ++j) prod[j] = (l.gens[j] * l.gens[i]).coords();
    for (std::size_t r = 0; r < d; ++r) {
      std::vector<Rat> row(n, Rat(0));
      for (std::size_t j = 0; j < b; ++j) row[j] = prod[j][r];
      for (std::size_t k = 0; k < b; ++k) row[b + i * b + k] = -g[r][k];
      Int den = 1;
      for (const auto& v : row) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
      std::vector<Int> irow;
      for (const auto& v : row) irow.push_back(Rat(v * Rat(den)).get_num());
      system.push_back(std::move(irow));
    }
  }
  IntMatrix proj;
  for (const auto& k : integer_kernel(system, n)) proj.emplace_back(k.begin(), k.begin() + static_cast<std::ptrdiff_t>(b));
  EndoRing out;
  out.coords = hermite_basis(std::move(proj));
  out.rank = out.coords.size();
  for (const auto& c : out.coords) out.basis.push_back(combine(l, c));
  return out;
}

CurveCohomology curve_trace_cohomology(unsigned genus, const std::vector<RealAlgebraic>& thetas) {
  if (genus == 0) fail(ErrorKind::InvalidArgument, "genus must be positive");
  if (thetas.size() != 2 * genus - 1)
    fail(ErrorKind::DimensionMismatch,
         "genus " + std::to_string(genus) + " needs " + std::to_string(2 * genus - 1) + " parameters, got " + std::to_string(thetas.size()));
  const FieldPtr f = thetas[0].field();
  std::vector<RealAlgebraic> gens{RealAlgebraic::rational(f, Rat(1))};
  gens.insert(gens.end(), thetas.begin(), thetas.end());
  const PseudoLattice z = make_lattice({RealAlgebraic::rational(f, Rat(1))});
  return {z, make_lattice(std::move(gens)), z};
}

Int point_count_from_frobenius(const PseudoLattice& l, const RealAlgebraic& omega, const Int& q) {
  return 1 + q - trace(endo_matrix(l, omega));
}

Int point_count_from_frobenius(const IntMatrix& omega, const Int& q) {
  for (const auto& row : omega)
    if (row.size() != omega.size()) fail(ErrorKind::DimensionMismatch, "Frobenius matrix is not square");
  return 1 + q - trace(omega);
}

IntMatrix frobenius_companion(const Int& a, const Int& q) { return {{Int(0), Int(-q)}, {Int(1), a}}; }

DensityWitness density_witness(const PseudoLattice& l, const Rat& eps) {
  if (l.rank() < 2) fail(ErrorKind::InvalidArgument, "a rank-1 lattice is discrete");
  if (eps <= 0) fail(ErrorKind::InvalidArgument, "epsilon must be positive");
  const FieldPtr f = l.field;
  const RealAlgebraic theta = l.gens[1];
  const RealAlgebraic epsilon = RealAlgebraic::rational(f, eps);
  // Convergents p/q of theta; q*theta - p alternates in sign and shrinks.
  Int p_prev = 1, q_prev = 0, p_cur, q_cur = 1;
  RealAlgebraic x = theta;
  Int a = floor_of(x);
  p_cur = a;
  for (int step = 0; step < 10000; ++step) {
    RealAlgebraic value = theta * Rat(q_cur) - RealAlgebraic::rational(f, Rat(p_cur));
    std::vector<Int> coeffs(l.rank(), Int(0));
    coeffs[0] = -p_cur;
    coeffs[1] = q_cur;
    if (value.sign() < 0) {
      value = -value;
      for (auto& c : coeffs) c = -c;
    }
    if (value.sign() > 0 && value < epsilon) return {std::move(coeffs), std::move(value)};
    x = (x - RealAlgebraic::rational(f, Rat(a))).inverse();
    a = floor_of(x);
    const Int pn = a * p_cur + p_prev, qn = a * q_cur + q_prev;
    p_prev = p_cur;
    q_prev = q_cur;
    p_cur = pn;
    q_cur = qn;
  }
  fail(ErrorKind::InternalError, "continued fraction did not reach epsilon");
}

LatticeFile parse_lattice(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  std::optional<ZPoly> minpoly;
  FieldPtr field;
  std::vector<std::vector<Rat>> gens, endos;
  std::vector<std::size_t> gen_lines, endo_lines;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;
    std::string rest;
    std::getline(ls, rest);
    if (key == "field") {
      const auto eq = rest.find("minpoly=");
      if (eq == std::string::npos) parse_error(lineno, "expected 'field minpoly=<coefficients>'");
      std::vector<Int> c;
      for (const auto& t : split_numbers(rest.substr(eq + 8))) {
        const Rat v = parse_rational(t, lineno);
        if (!is_integer(v)) parse_error(lineno, "minimal polynomial coefficients must be integers");
        c.push_back(v.get_num());
      }
      minpoly = ZPoly(std::move(c));
    } else if (key == "root") {
      if (!minpoly) parse_error(lineno, "'root' before 'field'");
      const auto in_pos = rest.find("in");
      if (in_pos == std::string::npos) parse_error(lineno, "expected 'root in [a, b]'");
      const auto nums = split_numbers(rest.substr(in_pos + 2));
      if (nums.size() != 2) parse_error(lineno, "root interval needs two endpoints");
      field = NumberField::make(*minpoly, parse_rational(nums[0], lineno), parse_rational(nums[1], lineno));
    } else if (key == "gen" || key == "endo") {
      std::vector<Rat> c;
      for (const auto& t : split_numbers(rest)) c.push_back(parse_rational(t, lineno));
      if (c.empty()) parse_error(lineno, "empty coordinate vector");
      (key == "gen" ? gens : endos).push_back(std::move(c));
      (key == "gen" ? gen_lines : endo_lines).push_back(lineno);
    } else {
      parse_error(lineno, "unknown keyword '" + key + "'");
    }
  }
  if (!field) parse_error(lineno, "missing 'field' or 'root' line");
  auto element = [&](const std::vector<Rat>& c, std::size_t at) {
    if (c.size() > field->degree())
      parse_error(at, "coordinate vector longer than the field degree " + std::to_string(field->degree()));
    return RealAlgebraic(field, c);
  };
  std::vector<RealAlgebraic> g;
  for (std::size_t i = 0; i < gens.size(); ++i) g.push_back(element(gens[i], gen_lines[i]));
  if (g.empty()) parse_error(lineno, "no 'gen' lines");
  LatticeFile out{make_lattice(std::move(g)), {}};
  for (std::size_t i = 0; i < endos.size(); ++i) out.requested.push_back(element(endos[i], endo_lines[i]));
  return out;
}

LatticeFile load_lattice(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::InvalidArgument, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_lattice(ss.str());
}

}  // namespace weilzeta
