#include "weilzeta/polynomial.hpp"

#include <sstream>

#include "weilzeta/fp_poly.hpp"

namespace weilzeta {

QPoly to_rational(const ZPoly& p) {
  std::vector<Rat> c;
  c.reserve(p.size());
  for (const auto& v : p.coeffs()) c.emplace_back(v);
  return QPoly(std::move(c));
}

ZPoly primitive_integer(const QPoly& p) {
  if (p.is_zero()) return {};
  Int den = 1;
  for (const auto& v : p.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
  std::vector<Int> c;
  c.reserve(p.size());
  for (const auto& v : p.coeffs()) c.emplace_back(v.get_num() * (den / v.get_den()));
  return primitive_part(ZPoly(std::move(c)));
}

Int content(const ZPoly& p) {
  Int g = 0;
  for (const auto& v : p.coeffs()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  return g;
}

ZPoly primitive_part(const ZPoly& p) {
  if (p.is_zero()) return p;
  Int g = content(p);
  if (p.leading() < 0) g = -g;
  std::vector<Int> c = p.coeffs();
  for (auto& v : c) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  return ZPoly(std::move(c));
}

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) fail(ErrorKind::DivisionByZero, "polynomial division by zero");
  std::vector<Rat> r = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {QPoly{}, a};
  std::vector<Rat> q(r.size() - static_cast<std::size_t>(db), Rat(0));
  for (int i = static_cast<int>(r.size()) - 1; i >= db; --i) {
    const Rat c = r[static_cast<std::size_t>(i)] / b.leading();
    if (c == 0) continue;
    q[static_cast<std::size_t>(i - db)] = c;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(i - db + j)] -= c * b.coeffs()[static_cast<std::size_t>(j)];
  }
  r.resize(static_cast<std::size_t>(db));
  return {QPoly(std::move(q)), QPoly(std::move(r))};
}

QPoly gcd(QPoly a, QPoly b) {
  while (!b.is_zero()) {
    QPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a * (Rat(1) / a.leading());
}

bool divides_exactly(const ZPoly& a, const ZPoly& b, ZPoly* quotient) {
  if (b.is_zero()) return false;
  auto [q, r] = divmod(to_rational(a), to_rational(b));
  if (!r.is_zero()) return false;
  std::vector<Int> c;
  for (const auto& v : q.coeffs()) {
    if (!is_integer(v)) return false;
    c.push_back(v.get_num());
  }
  if (quotient) *quotient = ZPoly(std::move(c));
  return true;
}

ZPoly poly_pow(const ZPoly& p, unsigned e) {
  ZPoly r = ZPoly::constant(1);
  for (unsigned i = 0; i < e; ++i) r = r * p;
  return r;
}

Rat eval(const ZPoly& p, const Rat& x) {
  Rat acc = 0;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::vector<std::pair<ZPoly, unsigned>> squarefree_decomposition(const ZPoly& f) {
  std::vector<std::pair<ZPoly, unsigned>> out;
  if (f.degree() < 1) return out;
  const QPoly fq = to_rational(f);
  QPoly a = gcd(fq, fq.derivative());
  QPoly b = divmod(fq, a).first;
  QPoly c = divmod(fq.derivative(), a).first;
  QPoly d = c - b.derivative();
  for (unsigned i = 1; b.degree() >= 1; ++i) {
    QPoly ai = gcd(b, d);
    b = divmod(b, ai).first;
    c = divmod(d, ai).first;
    d = c - b.derivative();
    if (ai.degree() >= 1) out.emplace_back(primitive_integer(ai), i);
  }
  return out;
}

namespace {

ZPoly symmetric_lift(const ZPoly& a, const Int& p) {
  const Int half = p / 2;
  std::vector<Int> c = a.coeffs();
  for (auto& v : c) {
    v %= p;
    if (v < 0) v += p;
    if (v > half) v -= p;
  }
  return ZPoly(std::move(c));
}

// Square-free, primitive, positive leading coefficient, degree >= 2.
std::vector<ZPoly> zassenhaus(ZPoly h) {
  const int n = h.degree();
  Int norm2 = 0;
  for (const auto& v : h.coeffs()) norm2 += v * v;
  Int norm = sqrt(norm2) + 1;
  Int lc = h.leading();
  // Any factor has coefficients bounded by 2^n * ||h||_2; the lc-scaled
  // candidate is bounded by |lc| times that. Working modulo a single prime
  // above twice the bound makes the symmetric lift exact.
  Int bound = int_pow(Int(2), static_cast<unsigned long>(n)) * norm * abs(lc);
  Int p = 2 * bound + 1;
  mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
  for (;;) {
    if (lc % p != 0 && fp::gcd(h, h.derivative(), p).degree() == 0) break;
    mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
  }

  std::mt19937_64 rng(0x5eed);
  std::vector<ZPoly> modular = fp::factor_squarefree(h, p, rng);
  std::sort(modular.begin(), modular.end(),
            [](const ZPoly& a, const ZPoly& b) { return a.coeffs() < b.coeffs(); });

  std::vector<ZPoly> found;
  std::size_t s = 1;
  while (2 * s <= modular.size()) {
    const std::size_t r = modular.size();
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    bool hit = false;
    for (;;) {
      ZPoly g = ZPoly::constant(lc);
      for (auto i : idx) g = fp::mul(g, modular[i], p);
      g = primitive_part(symmetric_lift(g, p));
      ZPoly q;
      if (divides_exactly(h, g, &q)) {
        found.push_back(g);
        h = primitive_part(q);
        lc = h.leading();
        std::vector<ZPoly> rest;
        for (std::size_t i = 0; i < r; ++i)
          if (std::find(idx.begin(), idx.end(), i) == idx.end()) rest.push_back(modular[i]);
        modular = std::move(rest);
        hit = true;
        break;
      }
      // next combination
      std::size_t k = s;
      while (k > 0 && idx[k - 1] == r - s + (k - 1)) --k;
      if (k == 0) break;
      ++idx[k - 1];
      for (std::size_t j = k; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!hit) ++s;
  }
  if (h.degree() >= 1) found.push_back(h);
  return found;
}

}  // namespace

IntFactorization factor(const ZPoly& f) {
  if (f.is_zero()) fail(ErrorKind::InvalidArgument, "cannot factor the zero polynomial");
  IntFactorization out;
  out.unit = content(f);
  if (f.leading() < 0) out.unit = -out.unit;
  ZPoly g = primitive_part(f);

  unsigned x_mult = 0;
  while (g.degree() >= 1 && g.coeff(0) == 0) {
    g = ZPoly(std::vector<Int>(g.coeffs().begin() + 1, g.coeffs().end()));
    ++x_mult;
  }
  if (x_mult) out.factors.emplace_back(ZPoly{Int(0), Int(1)}, x_mult);

  for (auto& [h, mult] : squarefree_decomposition(g)) {
    if (h.degree() == 1) {
      out.factors.emplace_back(h, mult);
      continue;
    }
    for (auto& irr : zassenhaus(h)) out.factors.emplace_back(std::move(irr), mult);
  }
  std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
    if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
    if (a.first.coeffs() != b.first.coeffs()) return a.first.coeffs() < b.first.coeffs();
    return a.second < b.second;
  });
  return out;
}

bool is_irreducible(const ZPoly& f) {
  if (f.degree() < 1) return false;
  const auto fac = factor(f);
  return fac.factors.size() == 1 && fac.factors[0].second == 1;
}

namespace {

template <class C>
std::string render(const std::vector<C>& c, std::string_view var) {
  if (c.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    C mag = abs(c[i]);
    const bool neg = c[i] < 0;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << to_string(mag);
      continue;
    }
    if (mag != 1) os << to_string(mag) << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

}  // namespace

std::string to_string(const ZPoly& p, std::string_view var) { return render(p.coeffs(), var); }
std::string to_string(const QPoly& p, std::string_view var) { return render(p.coeffs(), var); }

}  // namespace weilzeta
