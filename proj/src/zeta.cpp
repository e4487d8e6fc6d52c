#include "weilzeta/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>

#include "weilzeta/linalg.hpp"
#include "weilzeta/numeric_roots.hpp"

namespace weilzeta {

namespace {

std::vector<Rat> series_quotient(const QPoly& num, const QPoly& den, std::size_t order) {
  const Rat d0 = den.coeff(0);
  if (d0 == 0) fail(ErrorKind::NotNormalized, "denominator vanishes at t = 0");
  std::vector<Rat> c(order + 1);
  for (std::size_t k = 0; k <= order; ++k) {
    Rat acc = num.coeff(k);
    for (std::size_t j = 1; j <= k && j < den.size(); ++j) acc -= den.coeff(j) * c[k - j];
    c[k] = acc / d0;
  }
  return c;
}

bool matches(const std::vector<Rat>& a, const std::vector<Rat>& b, std::size_t upto) {
  for (std::size_t k = 0; k <= upto; ++k)
    if (a[k] != b[k]) return false;
  return true;
}

/// Cancel the common factor and scale so den(0) = 1.
std::pair<QPoly, QPoly> reduce(const QPoly& num, const QPoly& den) {
  const QPoly g = gcd(num, den);
  QPoly n = divmod(num, g).first, d = divmod(den, g).first;
  const Rat d0 = d.coeff(0);
  if (d0 == 0) fail(ErrorKind::NoRationalFit, "denominator vanishes at t = 0");
  const Rat s = 1 / d0;
  return {n * s, d * s};
}

bool all_integer(const QPoly& p) {
  return std::all_of(p.coeffs().begin(), p.coeffs().end(), [](const Rat& v) { return is_integer(v); });
}

ZPoly integral(const QPoly& p, const char* what) {
  std::vector<Int> c;
  for (const auto& v : p.coeffs()) {
    if (!is_integer(v)) fail(ErrorKind::NotIntegral, std::string(what) + " coefficient " + to_string(v));
    c.push_back(v.get_num());
  }
  return ZPoly(std::move(c));
}

/// Padé solution reduced to lowest terms, verified through order a + b.
std::optional<std::pair<QPoly, QPoly>> pade_rational(const PowerSeriesQ& s, unsigned a, unsigned b) {
  const auto& c = s.coeffs;
  auto at = [&](long k) { return k < 0 ? Rat(0) : c[static_cast<std::size_t>(k)]; };
  std::vector<Rat> d(b + 1, Rat(0));
  d[0] = 1;
  if (b > 0) {
    RatMatrix m(b, std::vector<Rat>(b));
    std::vector<Rat> rhs(b);
    for (unsigned r = 0; r < b; ++r) {
      const long k = static_cast<long>(a + 1 + r);
      for (unsigned j = 1; j <= b; ++j) m[r][j - 1] = at(k - static_cast<long>(j));
      rhs[r] = -at(k);
    }
    const auto sol = solve(m, rhs);
    if (!sol) return std::nullopt;
    for (unsigned j = 1; j <= b; ++j) d[j] = (*sol)[j - 1];
  }
  const QPoly den(d);
  std::vector<Rat> n(a + 1, Rat(0));
  for (unsigned k = 0; k <= a; ++k)
    for (unsigned j = 0; j <= k && j <= b; ++j) n[k] += d[j] * c[k - j];
  auto [rn, rd] = reduce(QPoly(n), den);
  if (!matches(series_quotient(rn, rd, a + b), c, a + b)) return std::nullopt;
  return std::make_pair(rn, rd);
}

void require_normalized(const RationalFunctionQ& z) {
  if (z.num.coeff(0) != 1 || z.den.coeff(0) != 1)
    fail(ErrorKind::NotNormalized, "constant terms must be 1 in " + to_string(z));
}

/// Series of t P'(t) / P(t) for P(0) = 1, coefficients u_1..u_m.
std::vector<Int> log_derivative(const ZPoly& p, unsigned m) {
  std::vector<Int> u(m + 1, Int(0));
  for (unsigned k = 1; k <= m; ++k) {
    Int acc = Int(k) * p.coeff(k);
    for (unsigned j = 1; j < k; ++j) acc -= p.coeff(j) * u[k - j];
    u[k] = acc;
  }
  return u;
}

/// Coefficients k -> a_{d-k} scale^k: the polynomial (scale t)^d P(1/(scale t)).
QPoly twisted_reverse(const ZPoly& p, const Int& scale) {
  const int d = p.degree();
  std::vector<Rat> r;
  Int s = 1;
  for (int k = 0; k <= d; ++k) {
    r.emplace_back(p.coeff(static_cast<std::size_t>(d - k)) * s);
    s *= scale;
  }
  return QPoly(std::move(r));
}

}  // namespace

bool operator==(const RationalFunctionQ& a, const RationalFunctionQ& b) { return a.num == b.num && a.den == b.den; }

std::string to_string(const RationalFunctionQ& z) {
  return "(" + to_string(z.num) + ") / (" + to_string(z.den) + ")";
}

PowerSeriesQ zeta_series(const std::vector<Int>& counts) {
  if (counts.empty()) fail(ErrorKind::EmptySeries, "no point counts given");
  const std::size_t m = counts.size();
  std::vector<Rat> c(m + 1, Rat(0));
  c[0] = 1;
  for (std::size_t k = 1; k <= m; ++k) {
    Rat acc = 0;
    for (std::size_t j = 1; j <= k; ++j) acc += Rat(counts[j - 1]) * c[k - j];
    c[k] = acc / static_cast<long>(k);
    c[k].canonicalize();
  }
  return {std::move(c)};
}

PowerSeriesQ expand(const RationalFunctionQ& z, std::size_t order) {
  return {series_quotient(to_rational(z.num), to_rational(z.den), order)};
}

RationalFunctionQ normalize(const QPoly& num, const QPoly& den) {
  auto [n, d] = reduce(num, den);
  return {integral(n, "numerator"), integral(d, "denominator")};
}

RationalFunctionQ pade_reconstruct(const PowerSeriesQ& s, unsigned num_deg, unsigned den_deg) {
  if (s.coeffs.empty() || s.order() < num_deg + den_deg)
    fail(ErrorKind::InsufficientPrecision, "series of order " + std::to_string(s.order()) + " cannot fix degrees (" +
                                               std::to_string(num_deg) + ", " + std::to_string(den_deg) + ")");
  if (s.coeffs[0] != 1) fail(ErrorKind::NotNormalized, "series constant term is " + to_string(s.coeffs[0]));
  const auto fit = pade_rational(s, num_deg, den_deg);
  if (!fit)
    fail(ErrorKind::NoRationalFit,
         "no rational function of degrees (" + std::to_string(num_deg) + ", " + std::to_string(den_deg) + ")");
  return {integral(fit->first, "numerator"), integral(fit->second, "denominator")};
}

std::optional<RationalFunctionQ> fit_rational(const PowerSeriesQ& s) {
  if (s.coeffs.empty()) fail(ErrorKind::EmptySeries, "empty series");
  if (s.coeffs[0] != 1) fail(ErrorKind::NotNormalized, "series constant term is " + to_string(s.coeffs[0]));
  const std::size_t order = s.order();
  for (std::size_t total = 0; total < order; ++total)
    for (std::size_t a = 0; a <= total; ++a) {
      const auto fit = pade_rational(s, static_cast<unsigned>(a), static_cast<unsigned>(total - a));
      if (!fit || !matches(series_quotient(fit->first, fit->second, order), s.coeffs, order)) continue;
      // A zeta function has integer coefficients, so a fractional fit is a coincidence of too few terms.
      if (!all_integer(fit->first) || !all_integer(fit->second)) continue;
      return RationalFunctionQ{integral(fit->first, "numerator"), integral(fit->second, "denominator")};
    }
  return std::nullopt;
}

ZPoly curve_numerator(const std::vector<Int>& counts, const Int& q, unsigned g, NumeratorMode mode) {
  if (g == 0) return ZPoly::constant(Int(1));
  const unsigned need = mode == NumeratorMode::Full ? 2 * g : g;
  if (counts.size() < need)
    fail(ErrorKind::InsufficientPrecision,
         "genus " + std::to_string(g) + " needs " + std::to_string(need) + " counts, got " + std::to_string(counts.size()));
  std::vector<Int> s(need + 1, Int(0));
  for (unsigned m = 1; m <= need; ++m) s[m] = int_pow(q, m) + 1 - counts[m - 1];
  std::vector<Int> a(2 * g + 1, Int(0));
  a[0] = 1;
  for (unsigned k = 1; k <= need; ++k) {
    Int acc = 0;
    for (unsigned j = 1; j <= k; ++j) acc -= s[j] * a[k - j];
    if (acc % k != 0) fail(ErrorKind::NotIntegral, "Newton identity leaves a fraction at degree " + std::to_string(k));
    a[k] = acc / k;
  }
  for (unsigned j = 0; j < g; ++j) {
    const Int mirrored = int_pow(q, g - j) * a[j];
    if (mode == NumeratorMode::Symmetric) {
      a[2 * g - j] = mirrored;
    } else if (a[2 * g - j] != mirrored) {
      fail(ErrorKind::FunctionalEquationViolated, "coefficient " + std::to_string(2 * g - j) + " is " +
                                                      to_string(a[2 * g - j]) + ", expected " + to_string(mirrored));
    }
  }
  return ZPoly(std::move(a));
}

int functional_equation_check(const RationalFunctionQ& z, const Int& q, unsigned n, long chi) {
  require_normalized(z);
  const Int big_q = int_pow(q, n);
  const long e = z.den.degree() - z.num.degree();
  const long low = std::min(e, chi);
  const QPoly num = to_rational(z.num), den = to_rational(z.den);
  const QPoly a = (twisted_reverse(z.num, big_q) * den).shifted(static_cast<std::size_t>(e - low)) * rat_pow(Rat(big_q), e);
  const QPoly b = (num * twisted_reverse(z.den, big_q)).shifted(static_cast<std::size_t>(chi - low));
  const long nchi = static_cast<long>(n) * chi;
  if (nchi % 2 == 0) {
    const QPoly rhs = b * rat_pow(Rat(q), nchi / 2);
    if (a == rhs) return 1;
    if (a == -rhs) return -1;
    fail(ErrorKind::FunctionalEquationViolated, "residual " + to_string(a - rhs));
  }
  const QPoly lhs2 = a * a, rhs2 = b * b * rat_pow(Rat(q), nchi);
  if (lhs2 == rhs2) return 0;
  fail(ErrorKind::FunctionalEquationViolated, "squared residual " + to_string(lhs2 - rhs2));
}

WeilFactorization weight_split(const RationalFunctionQ& z, const Int& q, unsigned n, double tol) {
  require_normalized(z);
  WeilFactorization out;
  out.q = q;
  out.n = n;
  out.factors.assign(2 * n + 1, ZPoly::constant(Int(1)));
  out.weights.assign(2 * n + 1, 0.0);
  const double log_q = std::log(q.get_d());
  auto place = [&](const ZPoly& poly, bool in_numerator) {
    if (poly.degree() < 1) return;
    for (auto [f, mult] : factor(poly).factors) {
      if (f.coeff(0) == -1) f = -f;
      if (f.coeff(0) != 1) fail(ErrorKind::NotNormalized, "factor " + to_string(f) + " has constant term != +-1");
      long weight = -1;
      double worst = 0;
      for (const auto& root : complex_roots(f)) {
        const double w = -2.0 * std::log(std::abs(root)) / log_q;
        const long i = std::lround(w);
        if (std::abs(w - i) > tol || (weight >= 0 && i != weight))
          fail(ErrorKind::MixedWeightFactor, "factor " + to_string(f) + " has a root of weight " + std::to_string(w));
        weight = i;
        worst = std::max(worst, std::abs(w - i));
      }
      if (weight < 0 || weight > static_cast<long>(2 * n))
        fail(ErrorKind::WeightOutOfRange,
             "factor " + to_string(f) + " has weight " + std::to_string(weight) + " outside [0, " + std::to_string(2 * n) + "]");
      if ((weight % 2 == 1) != in_numerator)
        fail(ErrorKind::WeightParityMismatch, "factor " + to_string(f) + " of weight " + std::to_string(weight) + " sits in the " +
                                                  (in_numerator ? "numerator" : "denominator"));
      const auto i = static_cast<std::size_t>(weight);
      out.factors[i] = out.factors[i] * poly_pow(f, mult);
      out.weights[i] = std::max(out.weights[i], worst);
    }
  };
  place(z.num, true);
  place(z.den, false);
  for (std::size_t i = 0; i < out.factors.size(); ++i)
    out.chi += (i % 2 == 0 ? 1 : -1) * out.factors[i].degree();
  return out;
}

RhReport rh_check(const ZPoly& p, const Int& q, unsigned i, double tol) {
  if (p.coeff(0) != 1) fail(ErrorKind::NotNormalized, "P(0) = " + to_string(p.coeff(0)));
  RhReport r;
  const double scale = std::exp(-0.5 * i * std::log(q.get_d()));
  for (const auto& root : complex_roots(p))
    r.max_modulus_deviation = std::max(r.max_modulus_deviation, std::abs(scale / std::abs(root) - 1.0));
  r.pass = r.max_modulus_deviation <= tol;

  const int d = p.degree();
  const unsigned long id = static_cast<unsigned long>(i) * static_cast<unsigned long>(d);
  auto qp = [&](unsigned long e) { return int_pow(q, e); };
  r.reciprocal_ok = true;
  if (id % 2 == 0) {
    const Int lhs0 = qp(id / 2);
    int sign = 0;
    if (p.leading() == lhs0) sign = 1;
    else if (p.leading() == -lhs0) sign = -1;
    r.reciprocal_ok = sign != 0;
    for (int j = 0; r.reciprocal_ok && j <= d; ++j)
      r.reciprocal_ok = p.coeff(j) * lhs0 == sign * qp(i * static_cast<unsigned long>(j)) * p.coeff(d - j);
  } else {
    for (int j = 0; r.reciprocal_ok && j <= d; ++j) {
      const Int a = p.coeff(j), b = p.coeff(d - j);
      r.reciprocal_ok = a * a * qp(id) == qp(2ul * i * static_cast<unsigned long>(j)) * b * b;
    }
  }
  return r;
}

std::vector<bool> betti_check(const WeilFactorization& f, const std::vector<long>& expected) {
  if (expected.size() != f.factors.size())
    fail(ErrorKind::DimensionMismatch, "expected " + std::to_string(f.factors.size()) + " Betti numbers, got " +
                                           std::to_string(expected.size()));
  std::vector<bool> ok;
  for (std::size_t i = 0; i < expected.size(); ++i) ok.push_back(f.factors[i].degree() == expected[i]);
  return ok;
}

Int point_count_from_zeta(const RationalFunctionQ& z, unsigned m) {
  require_normalized(z);
  if (m == 0) fail(ErrorKind::InvalidArgument, "extension degree must be positive");
  return log_derivative(z.num, m)[m] - log_derivative(z.den, m)[m];
}

}  // namespace weilzeta
