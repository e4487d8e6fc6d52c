#include "weilzeta/fp_poly.hpp"

namespace weilzeta::fp {
namespace {

Int mod(const Int& a, const Int& p) {
  Int r = a % p;
  if (r < 0) r += p;
  return r;
}

Int random_below(const Int& p, std::mt19937_64& rng) {
  // p may exceed 64 bits; build from 64-bit limbs and reduce.
  Int acc = 0;
  const auto bits = mpz_sizeinbase(p.get_mpz_t(), 2) + 64;
  for (std::size_t b = 0; b < bits; b += 64) {
    acc <<= 64;
    Int limb;
    mpz_set_ui(limb.get_mpz_t(), static_cast<unsigned long>(rng()));
    acc += limb;
  }
  return mod(acc, p);
}

}  // namespace

ZPoly reduce(const ZPoly& a, const Int& p) {
  std::vector<Int> c(a.coeffs().size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = mod(a.coeffs()[i], p);
  return ZPoly(std::move(c));
}

ZPoly add(const ZPoly& a, const ZPoly& b, const Int& p) { return reduce(a + b, p); }
ZPoly sub(const ZPoly& a, const ZPoly& b, const Int& p) { return reduce(a - b, p); }
ZPoly mul(const ZPoly& a, const ZPoly& b, const Int& p) { return reduce(a * b, p); }
ZPoly scale(const ZPoly& a, const Int& s, const Int& p) { return reduce(a * s, p); }

Int inverse(const Int& a, const Int& p) {
  Int r;
  const Int m = mod(a, p);
  if (m == 0 || mpz_invert(r.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t()) == 0)
    fail(ErrorKind::DivisionByZero, "element " + m.get_str() + " is not invertible mod " + p.get_str());
  return r;
}

std::pair<ZPoly, ZPoly> divmod(const ZPoly& a, const ZPoly& b, const Int& p) {
  const ZPoly bb = reduce(b, p);
  if (bb.is_zero()) fail(ErrorKind::DivisionByZero, "polynomial division by zero mod p");
  std::vector<Int> r = reduce(a, p).coeffs();
  const int db = bb.degree();
  if (static_cast<int>(r.size()) - 1 < db) return {ZPoly{}, ZPoly(std::move(r))};
  const Int lead_inv = inverse(bb.leading(), p);
  std::vector<Int> q(r.size() - static_cast<std::size_t>(db), Int(0));
  for (int i = static_cast<int>(r.size()) - 1; i >= db; --i) {
    const Int c = mod(r[static_cast<std::size_t>(i)] * lead_inv, p);
    if (c == 0) continue;
    q[static_cast<std::size_t>(i - db)] = c;
    for (int j = 0; j <= db; ++j) {
      auto& slot = r[static_cast<std::size_t>(i - db + j)];
      slot = mod(slot - c * bb.coeffs()[static_cast<std::size_t>(j)], p);
    }
  }
  r.resize(static_cast<std::size_t>(db));
  return {ZPoly(std::move(q)), ZPoly(std::move(r))};
}

ZPoly rem(const ZPoly& a, const ZPoly& b, const Int& p) { return divmod(a, b, p).second; }

ZPoly make_monic(const ZPoly& a, const Int& p) {
  const ZPoly r = reduce(a, p);
  if (r.is_zero()) return r;
  return scale(r, inverse(r.leading(), p), p);
}

ZPoly gcd(ZPoly a, ZPoly b, const Int& p) {
  a = reduce(a, p);
  b = reduce(b, p);
  while (!b.is_zero()) {
    ZPoly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a, p);
}

ZPoly ext_gcd(const ZPoly& a, const ZPoly& b, const Int& p, ZPoly& s, ZPoly& t) {
  ZPoly r0 = reduce(a, p), r1 = reduce(b, p);
  ZPoly s0 = ZPoly::constant(1), s1;
  ZPoly t0, t1 = ZPoly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1, p);
    r0 = std::move(r1);
    r1 = std::move(r);
    ZPoly s2 = sub(s0, mul(q, s1, p), p);
    ZPoly t2 = sub(t0, mul(q, t1, p), p);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) {
    s = s0;
    t = t0;
    return r0;
  }
  const Int li = inverse(r0.leading(), p);
  s = scale(s0, li, p);
  t = scale(t0, li, p);
  return scale(r0, li, p);
}

ZPoly powmod(const ZPoly& base, const Int& e, const ZPoly& modulus, const Int& p) {
  ZPoly result = rem(ZPoly::constant(1), modulus, p);
  ZPoly b = rem(base, modulus, p);
  const auto bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = rem(mul(result, result, p), modulus, p);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = rem(mul(result, b, p), modulus, p);
  }
  return result;
}

bool is_irreducible(const ZPoly& f, const Int& p) {
  const ZPoly g = make_monic(f, p);
  const int n = g.degree();
  if (n < 1) return false;
  if (n == 1) return true;
  const ZPoly x = ZPoly{Int(0), Int(1)};
  ZPoly xp = x;  // x^{p^i} mod g
  for (int i = 1; i <= n / 2; ++i) {
    xp = powmod(xp, p, g, p);
    if (gcd(sub(xp, x, p), g, p).degree() != 0) return false;
  }
  for (int i = n / 2 + 1; i <= n; ++i) xp = powmod(xp, p, g, p);
  return sub(xp, x, p).is_zero();
}

namespace {

void equal_degree_split(const ZPoly& f, int d, const Int& p, std::mt19937_64& rng,
                        std::vector<ZPoly>& out) {
  const int n = f.degree();
  if (n == d) {
    out.push_back(f);
    return;
  }
  const Int e = (int_pow(p, static_cast<unsigned long>(d)) - 1) / 2;
  for (;;) {
    std::vector<Int> c(static_cast<std::size_t>(n));
    for (auto& v : c) v = random_below(p, rng);
    ZPoly h(std::move(c));
    if (h.degree() < 1) continue;
    ZPoly g = gcd(h, f, p);
    if (g.degree() < 1) {
      ZPoly w = sub(powmod(h, e, f, p), ZPoly::constant(1), p);
      g = gcd(w, f, p);
    }
    if (g.degree() >= 1 && g.degree() < n) {
      equal_degree_split(g, d, p, rng, out);
      equal_degree_split(divmod(f, g, p).first, d, p, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<ZPoly> factor_squarefree(const ZPoly& f_in, const Int& p, std::mt19937_64& rng) {
  ZPoly f = make_monic(f_in, p);
  std::vector<ZPoly> out;
  const ZPoly x = ZPoly{Int(0), Int(1)};
  ZPoly xp = x;
  for (int d = 1; f.degree() >= 2 * d; ++d) {
    xp = powmod(xp, p, f, p);
    ZPoly g = gcd(sub(xp, x, p), f, p);
    if (g.degree() >= 1) {
      equal_degree_split(g, d, p, rng, out);
      f = divmod(f, g, p).first;
      xp = rem(xp, f, p);
    }
  }
  if (f.degree() >= 1) out.push_back(f);
  return out;
}

}  // namespace weilzeta::fp
