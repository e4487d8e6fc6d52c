#include "weilzeta/algebraic.hpp"

#include <algorithm>

namespace weilzeta {

namespace {

QPoly reduce_mod(const QPoly& g, const ZPoly& minpoly) {
  if (g.degree() < minpoly.degree()) return g;
  return divmod(g, to_rational(minpoly)).second;
}

Rat abs_rat(const Rat& v) { return v < 0 ? Rat(-v) : v; }

}  // namespace

NumberField::NumberField(ZPoly minpoly, RatInterval iv) : minpoly_(std::move(minpoly)), sturm_(minpoly_), iv_(iv) {}

std::shared_ptr<const NumberField> NumberField::make(const ZPoly& minpoly, const Rat& lo, const Rat& hi) {
  if (minpoly.degree() < 1 || minpoly.leading() != 1)
    fail(ErrorKind::InvalidField, "minimal polynomial " + to_string(minpoly, "x") + " is not monic of positive degree");
  if (!is_irreducible(minpoly)) fail(ErrorKind::InvalidField, to_string(minpoly, "x") + " is reducible over Q");
  if (lo > hi) fail(ErrorKind::InvalidField, "empty root interval");
  if (minpoly.degree() == 1) {
    const Rat r = -Rat(minpoly.coeff(0));
    if (r < lo || r > hi) fail(ErrorKind::InvalidField, "root " + to_string(r) + " lies outside the interval");
    return std::make_shared<NumberField>(minpoly, RatInterval{r, r});
  }
  const SturmSequence s(minpoly);
  // Irreducible of degree >= 2 has no rational roots, so lo is never a root.
  const int n = lo == hi ? 0 : s.count(lo, hi);
  if (n != 1)
    fail(ErrorKind::InvalidField, "interval [" + to_string(lo) + ", " + to_string(hi) + "] holds " + std::to_string(n) +
                                      " roots of " + to_string(minpoly, "x"));
  return std::make_shared<NumberField>(minpoly, RatInterval{lo, hi});
}

RatInterval NumberField::interval() const {
  std::lock_guard lock(mu_);
  return iv_;
}

RatInterval NumberField::interval(const Rat& width) const {
  std::lock_guard lock(mu_);
  if (!iv_.is_point() && iv_.width() >= width) iv_ = refine(sturm_, iv_, width);
  return iv_;
}

bool NumberField::same_as(const NumberField& other) const {
  if (this == &other) return true;
  if (minpoly_ != other.minpoly_) return false;
  if (is_rational()) return true;
  const RatInterval a = interval(), b = other.interval();
  const Rat lo = std::max(a.lo, b.lo), hi = std::min(a.hi, b.hi);
  return lo < hi && sturm_.count(lo, hi) >= 1;
}

RealAlgebraic::RealAlgebraic(FieldPtr field, std::vector<Rat> coords) : field_(std::move(field)) {
  const QPoly r = reduce_mod(QPoly(std::move(coords)), field_->minpoly());
  c_.assign(field_->degree(), Rat(0));
  for (std::size_t i = 0; i < r.size(); ++i) c_[i] = r.coeffs()[i];
}

RealAlgebraic RealAlgebraic::rational(FieldPtr field, const Rat& v) { return {std::move(field), {v}}; }

RealAlgebraic RealAlgebraic::generator(FieldPtr field) { return {std::move(field), {Rat(0), Rat(1)}}; }

bool RealAlgebraic::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rat& v) { return v == 0; });
}

bool RealAlgebraic::is_rational() const {
  return std::all_of(c_.begin() + 1, c_.end(), [](const Rat& v) { return v == 0; });
}

int RealAlgebraic::sign() const {
  const QPoly g(c_);
  if (g.is_zero()) return 0;
  if (g.degree() == 0) return sgn(g.coeff(0));
  const int lead = sgn(g.leading());
  const ZPoly h = primitive_integer(g);
  const SturmSequence s(h);
  RatInterval iv = field_->interval();
  // h has no root at theta, so once (lo, hi] is root-free its sign there is the answer.
  while (s.count(iv.lo, iv.hi) != 0) iv = field_->interval(iv.width() / 2);
  return lead * sign_at(h, iv.hi);
}

void RealAlgebraic::require_same_field(const RealAlgebraic& o) const {
  if (field_ != o.field_ && !field_->same_as(*o.field_))
    fail(ErrorKind::FieldMismatch, "elements of Q(" + to_string(field_->minpoly(), "x") + ") and Q(" +
                                       to_string(o.field_->minpoly(), "x") + ")");
}

RealAlgebraic RealAlgebraic::operator-() const {
  auto c = c_;
  for (auto& v : c) v = -v;
  return {field_, std::move(c)};
}

RealAlgebraic operator+(const RealAlgebraic& a, const RealAlgebraic& b) {
  a.require_same_field(b);
  auto c = a.c_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.c_[i];
  return {a.field_, std::move(c)};
}

RealAlgebraic operator-(const RealAlgebraic& a, const RealAlgebraic& b) { return a + (-b); }

RealAlgebraic operator*(const RealAlgebraic& a, const RealAlgebraic& b) {
  a.require_same_field(b);
  return {a.field_, (QPoly(a.c_) * QPoly(b.c_)).coeffs()};
}

RealAlgebraic operator*(const RealAlgebraic& a, const Rat& s) {
  auto c = a.c_;
  for (auto& v : c) v *= s;
  return {a.field_, std::move(c)};
}

RealAlgebraic operator/(const RealAlgebraic& a, const RealAlgebraic& b) { return a * b.inverse(); }

bool operator==(const RealAlgebraic& a, const RealAlgebraic& b) {
  a.require_same_field(b);
  return a.c_ == b.c_;
}

RatMatrix RealAlgebraic::multiplication_matrix() const {
  const std::size_t d = field_->degree();
  RatMatrix m(d, std::vector<Rat>(d));
  RealAlgebraic col = *this;
  const RealAlgebraic theta = generator(field_);
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t i = 0; i < d; ++i) m[i][j] = col.c_[i];
    col = col * theta;
  }
  return m;
}

RealAlgebraic RealAlgebraic::inverse() const {
  if (is_zero()) fail(ErrorKind::DivisionByZero, "inverse of zero");
  std::vector<Rat> e(field_->degree(), Rat(0));
  e[0] = 1;
  const auto x = solve(multiplication_matrix(), e);
  if (!x) fail(ErrorKind::InternalError, "multiplication matrix of a nonzero element is singular");
  return {field_, *x};
}

RealAlgebraic RealAlgebraic::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  RealAlgebraic acc = rational(field_, Rat(1)), base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

QPoly RealAlgebraic::minimal_polynomial() const {
  const QPoly cp = characteristic_polynomial(multiplication_matrix());
  const QPoly g = gcd(cp, cp.derivative());
  QPoly m = divmod(cp, g).first;
  return m * (1 / m.leading());
}

bool RealAlgebraic::is_algebraic_integer() const {
  const QPoly m = minimal_polynomial();
  return std::all_of(m.coeffs().begin(), m.coeffs().end(), [](const Rat& v) { return is_integer(v); });
}

bool RealAlgebraic::is_unit() const {
  if (!is_algebraic_integer()) return false;
  const Rat c0 = minimal_polynomial().coeff(0);
  return c0 == 1 || c0 == -1;
}

Rat RealAlgebraic::approximate(const Rat& tol) const {
  const QPoly g(c_);
  if (g.degree() <= 0 || field_->is_rational()) return g.eval(field_->interval().hi);
  RatInterval iv = field_->interval();
  for (;;) {
    const Rat m = std::max(abs_rat(iv.lo), abs_rat(iv.hi));
    Rat lip = 0, mp = 1;
    for (std::size_t i = 1; i < g.size(); ++i) {
      lip += Rat(static_cast<long>(i)) * abs_rat(g.coeff(i)) * mp;
      mp *= m;
    }
    if (lip * iv.width() <= tol) return g.eval(iv.midpoint());
    iv = field_->interval(tol / (lip + 1));
  }
}

double RealAlgebraic::to_double() const { return approximate(Rat(1, 1) / Rat(Int(1) << 80)).get_d(); }

std::string RealAlgebraic::decimal(int digits) const {
  if (is_zero()) return "0";
  Rat tol(1, 10000000000L), a = approximate(tol);
  while (abs_rat(a) <= 2 * tol) {
    tol /= Rat(10000000000L);
    a = approximate(tol);
  }
  // Relative accuracy well past the printed digits.
  Rat rel = abs_rat(a) / 2;
  for (int i = 0; i < digits + 4; ++i) rel /= 10;
  a = approximate(rel);
  mpf_class f(a, static_cast<mp_bitcnt_t>(digits * 4 + 64));
  mp_exp_t exp = 0;
  std::string m = f.get_str(exp, 10, static_cast<std::size_t>(digits));
  std::string sign;
  if (!m.empty() && m[0] == '-') {
    sign = "-";
    m.erase(0, 1);
  }
  if (exp > 0 && exp <= digits) {
    if (m.size() < static_cast<std::size_t>(exp)) m.append(static_cast<std::size_t>(exp) - m.size(), '0');
    std::string out = sign + m.substr(0, static_cast<std::size_t>(exp));
    if (m.size() > static_cast<std::size_t>(exp)) out += "." + m.substr(static_cast<std::size_t>(exp));
    return out;
  }
  if (exp <= 0 && exp > -6) return sign + "0." + std::string(static_cast<std::size_t>(-exp), '0') + m;
  return sign + m.substr(0, 1) + (m.size() > 1 ? "." + m.substr(1) : "") + "e" + std::to_string(exp - 1);
}

std::string coords_string(const RealAlgebraic& a) {
  std::string out = "[";
  for (std::size_t i = 0; i < a.coords().size(); ++i) out += (i ? ", " : "") + to_string(a.coords()[i]);
  return out + "]";
}

}  // namespace weilzeta
