#include "weilzeta/cmcurve.hpp"

#include "weilzeta/variety.hpp"

namespace weilzeta {

std::string FrobeniusData::eigenvalue_string(int which) const {
  if (disc == 0) return to_string(center);
  // Pull the square part out of |disc| so -16 renders as 2*i.
  Int m = abs(disc), s = 1;
  for (Int f = 2; f * f <= m; ++f)
    while (m % (f * f) == 0) {
      m /= f * f;
      s *= f;
    }
  const Rat c = half_coeff * Rat(s);
  std::string root = disc < 0 ? (m == 1 ? "i" : "i*sqrt(" + to_string(m) + ")") : (m == 1 ? "1" : "sqrt(" + to_string(m) + ")");
  if (disc > 0 && m == 1) return to_string(Rat(which == 1 ? Rat(center + c) : Rat(center - c)));
  const std::string term = (c == 1 ? "" : to_string(c) + "*") + root;
  if (center == 0) return (which == 1 ? "" : "-") + term;
  return to_string(center) + (which == 1 ? " + " : " - ") + term;
}

Int frobenius_trace(const Int& a, const Int& b, const Int& p) { return p + 1 - ec_count(a, b, p); }

std::pair<Int, Int> two_squares(const Int& p) {
  if (!is_prime(p) || p % 4 != 1) fail(ErrorKind::InvalidArgument, to_string(p) + " is not a prime congruent to 1 mod 4");
  // r^2 = -1 mod p from c^((p-1)/4) for the first non-residue c.
  Int r;
  const Int e = (p - 1) / 4, minus_one = p - 1;
  for (Int c = 2;; ++c) {
    mpz_powm(r.get_mpz_t(), c.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
    Int sq = r * r % p;
    if (sq == minus_one) break;
  }
  Int a = p, b = r;
  while (b * b > p) {
    Int t = a % b;
    a = b;
    b = t;
  }
  Int rest = p - b * b, y;
  mpz_sqrt(y.get_mpz_t(), rest.get_mpz_t());
  if (y * y != rest) fail(ErrorKind::InternalError, "Cornacchia failed for " + to_string(p));
  Int x = b;
  if (x < y) std::swap(x, y);
  return {x, y};
}

Int grossencharacter_trace_d1(const Int& p) {
  if (!is_prime(p)) fail(ErrorKind::InvalidPrime, to_string(p) + " is not prime");
  if (p <= 3) fail(ErrorKind::UnsupportedCharacteristic, "p must exceed 3");
  if (p % 4 == 3) return 0;
  auto [x, y] = two_squares(p);
  Int a = x % 2 != 0 ? x : y;
  const Int b = x % 2 != 0 ? y : x;
  // b is even, so only the sign of a is constrained by a + b = 1 mod 4.
  Int r = (a + b) % 4;
  if (r < 0) r += 4;
  if (r != 1) a = -a;
  return 2 * a;
}

FrobeniusData frobenius_eigenvalues(const Int& a, const Int& q) {
  FrobeniusData d;
  d.a = a;
  d.q = q;
  d.disc = a * a - 4 * q;
  d.center = Rat(a, 2);
  d.center.canonicalize();
  d.half_coeff = Rat(1, 2);
  return d;
}

Int count_via_character(const Int& a, const Int& q) {
  if (q < 1) fail(ErrorKind::InvalidArgument, "q must be positive, got " + to_string(q));
  if (a * a > 4 * q) fail(ErrorKind::HasseViolation, "|" + to_string(a) + "| > 2 sqrt(" + to_string(q) + ")");
  return 1 - a + q;
}

std::vector<Int> counts_from_trace(const Int& a, const Int& q, unsigned m_max) {
  std::vector<Int> out;
  Int prev = 2, cur = a, qm = q;
  for (unsigned m = 1; m <= m_max; ++m) {
    out.push_back(qm + 1 - cur);
    const Int next = a * cur - q * prev;
    prev = cur;
    cur = next;
    qm *= q;
  }
  return out;
}

}  // namespace weilzeta
