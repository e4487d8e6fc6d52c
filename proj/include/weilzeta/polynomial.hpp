#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "weilzeta/common.hpp"

namespace weilzeta {

/// Dense univariate polynomial, coefficients stored low-to-high with no
/// trailing zeros. The zero polynomial has an empty coefficient vector and
/// degree -1.
template <class C>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<C> coeffs) : c_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<C> coeffs) : c_(coeffs) { trim(); }

  static Polynomial constant(const C& v) { return Polynomial(std::vector<C>{v}); }
  static Polynomial monomial(const C& v, std::size_t k) {
    std::vector<C> c(k + 1, C(0));
    c[k] = v;
    return Polynomial(std::move(c));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  std::size_t size() const { return c_.size(); }
  const std::vector<C>& coeffs() const { return c_; }

  C coeff(std::size_t i) const { return i < c_.size() ? c_[i] : C(0); }
  const C& leading() const { return c_.back(); }

  C eval(const C& x) const {
    C acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Polynomial derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<C> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * C(static_cast<long>(i));
    return Polynomial(std::move(d));
  }

  /// Truncate to terms of degree < n.
  Polynomial truncated(std::size_t n) const {
    if (c_.size() <= n) return *this;
    return Polynomial(std::vector<C>(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(n)));
  }

  /// t^deg * p(1/t), using `deg` as the nominal degree.
  Polynomial reversed(std::size_t deg) const {
    std::vector<C> r(deg + 1, C(0));
    for (std::size_t i = 0; i < c_.size() && i <= deg; ++i) r[deg - i] = c_[i];
    return Polynomial(std::move(r));
  }

  Polynomial shifted(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<C> r(k, C(0));
    r.insert(r.end(), c_.begin(), c_.end());
    return Polynomial(std::move(r));
  }

  Polynomial operator-() const {
    auto r = c_;
    for (auto& v : r) v = -v;
    return Polynomial(std::move(r));
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), C(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), C(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator*=(const C& s) {
    for (auto& v : c_) v *= s;
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const C& s) { return a *= s; }
  friend Polynomial operator*(const C& s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<C> r(a.c_.size() + b.c_.size() - 1, C(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(r));
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<C> c_;
};

using ZPoly = Polynomial<Int>;
using QPoly = Polynomial<Rat>;

QPoly to_rational(const ZPoly& p);

/// Multiply through by the lcm of denominators and divide by the content.
/// The sign is chosen so the leading coefficient is positive.
ZPoly primitive_integer(const QPoly& p);
Int content(const ZPoly& p);
ZPoly primitive_part(const ZPoly& p);

/// Quotient and remainder over Q. Throws DivisionByZero for b == 0.
std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
/// Monic gcd over Q (zero if both are zero).
QPoly gcd(QPoly a, QPoly b);
/// a / b over Z when b divides a exactly, otherwise false.
bool divides_exactly(const ZPoly& a, const ZPoly& b, ZPoly* quotient = nullptr);

ZPoly poly_pow(const ZPoly& p, unsigned e);
Rat eval(const ZPoly& p, const Rat& x);

/// Square-free decomposition of a primitive integer polynomial: f = prod g_i^i.
std::vector<std::pair<ZPoly, unsigned>> squarefree_decomposition(const ZPoly& f);

struct IntFactorization {
  Int unit;  // sign times content
  std::vector<std::pair<ZPoly, unsigned>> factors;  // primitive, positive leading coefficient
};

/// Complete factorization over Z into irreducibles. Factors are sorted by
/// (degree, coefficients) so the output is deterministic.
IntFactorization factor(const ZPoly& f);
/// Irreducible over Q (the content is ignored).
bool is_irreducible(const ZPoly& f);

std::string to_string(const ZPoly& p, std::string_view var = "t");
std::string to_string(const QPoly& p, std::string_view var = "t");

}  // namespace weilzeta
