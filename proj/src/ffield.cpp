#include "weilzeta/ffield.hpp"

#include <optional>
#include <sstream>

#include "weilzeta/fp_poly.hpp"

namespace weilzeta {
namespace {

const FieldSpec& common_field(const FFElement& a, const FFElement& b) {
  if (a.field_ptr() != b.field_ptr() && !(a.field() == b.field()))
    fail(ErrorKind::FieldMismatch, "operands belong to different fields");
  return a.field();
}

std::vector<Int> padded(const ZPoly& poly, unsigned m) {
  std::vector<Int> c(m, Int(0));
  for (std::size_t i = 0; i < poly.size() && i < m; ++i) c[i] = poly.coeffs()[i];
  return c;
}

}  // namespace

FFElement::FFElement(std::shared_ptr<const FieldSpec> field, std::vector<Int> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != field_->m)
    fail(ErrorKind::DimensionMismatch, "element needs exactly " + std::to_string(field_->m) + " coefficients");
  for (auto& c : coeffs_) {
    c %= field_->p;
    if (c < 0) c += field_->p;
  }
}

bool FFElement::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

Int FFElement::index() const {
  Int idx = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) idx = idx * field_->p + *it;
  return idx;
}

FFElement FFElement::operator-() const {
  std::vector<Int> c = coeffs_;
  for (auto& v : c) v = -v;
  return FFElement(field_, std::move(c));
}

FFElement operator+(const FFElement& a, const FFElement& b) {
  common_field(a, b);
  std::vector<Int> c(a.coeffs_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeffs_[i] + b.coeffs_[i];
  return FFElement(a.field_, std::move(c));
}

FFElement operator-(const FFElement& a, const FFElement& b) { return a + (-b); }

FFElement operator*(const FFElement& a, const FFElement& b) {
  const FieldSpec& f = common_field(a, b);
  const ZPoly prod = fp::mul(ZPoly(a.coeffs_), ZPoly(b.coeffs_), f.p);
  return FFElement(a.field_, padded(fp::rem(prod, f.modulus, f.p), f.m));
}

FFElement operator/(const FFElement& a, const FFElement& b) {
  common_field(a, b);
  return a * inv(b);
}

bool operator==(const FFElement& a, const FFElement& b) {
  common_field(a, b);
  return a.coeffs_ == b.coeffs_;
}

FFElement inv(const FFElement& a) {
  if (a.is_zero()) fail(ErrorKind::DivisionByZero, "inverse of zero");
  const FieldSpec& f = a.field();
  ZPoly s, t;
  const ZPoly g = fp::ext_gcd(ZPoly(a.coeffs()), f.modulus, f.p, s, t);
  if (g.degree() != 0) fail(ErrorKind::InternalError, "modulus is not irreducible");
  return FFElement(a.field_ptr(), padded(fp::rem(s, f.modulus, f.p), f.m));
}

FFElement pow(const FFElement& a, const Int& e) {
  if (e < 0) fail(ErrorKind::InvalidArgument, "negative exponent");
  std::vector<Int> one(a.field().m, Int(0));
  one[0] = 1;
  FFElement result(a.field_ptr(), std::move(one));
  const auto bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = result * result;
    if (mpz_tstbit(e.get_mpz_t(), i)) result = result * a;
  }
  return result;
}

std::string to_string(const FFElement& a) {
  return to_string(ZPoly(a.coeffs()), "x");
}

FiniteField FiniteField::make(const Int& p, long m) {
  if (!is_prime(p)) fail(ErrorKind::InvalidPrime, p.get_str() + " is not prime");
  if (m <= 0) fail(ErrorKind::InvalidDegree, "extension degree must be >= 1, got " + std::to_string(m));
  auto spec = std::make_shared<FieldSpec>();
  spec->p = p;
  spec->m = static_cast<unsigned>(m);
  if (m == 1) {
    spec->modulus = ZPoly{Int(0), Int(1)};
    return FiniteField(std::move(spec));
  }
  // Lexicographic order on (c_0, ..., c_{m-1}): c_0 is the most significant
  // digit. c_0 = 0 makes x a factor, so the scan starts at c_0 = 1.
  const Int total = int_pow(p, static_cast<unsigned long>(m));
  const Int start = int_pow(p, static_cast<unsigned long>(m - 1));
  for (Int idx = start; idx < total; ++idx) {
    std::vector<Int> c(static_cast<std::size_t>(m) + 1, Int(0));
    Int rest = idx;
    for (long i = m - 1; i >= 0; --i) {
      c[static_cast<std::size_t>(i)] = rest % p;
      rest /= p;
    }
    c[static_cast<std::size_t>(m)] = 1;
    ZPoly candidate(std::move(c));
    if (fp::is_irreducible(candidate, p)) {
      spec->modulus = std::move(candidate);
      return FiniteField(std::move(spec));
    }
  }
  fail(ErrorKind::InternalError, "no irreducible polynomial found");
}

FFElement FiniteField::zero() const { return FFElement(spec_, std::vector<Int>(spec_->m, Int(0))); }

FFElement FiniteField::one() const { return from_int(1); }

FFElement FiniteField::generator() const {
  std::vector<Int> c(spec_->m, Int(0));
  if (spec_->m >= 2) c[1] = 1;
  return FFElement(spec_, std::move(c));
}

FFElement FiniteField::from_int(const Int& v) const {
  std::vector<Int> c(spec_->m, Int(0));
  c[0] = v;
  return FFElement(spec_, std::move(c));
}

FFElement FiniteField::from_coeffs(std::vector<Int> coeffs) const { return FFElement(spec_, std::move(coeffs)); }

FFElement FiniteField::element_at(const Int& index) const {
  std::vector<Int> c(spec_->m, Int(0));
  Int rest = index;
  for (auto& v : c) {
    v = rest % spec_->p;
    rest /= spec_->p;
  }
  return FFElement(spec_, std::move(c));
}

std::vector<FFElement> FiniteField::enumerate(const Int& budget) const {
  const Int q = order();
  if (q > budget)
    fail(ErrorKind::EnumerationBudgetExceeded, "field of order " + q.get_str() + " exceeds budget " + budget.get_str());
  std::vector<FFElement> out;
  out.reserve(q.get_ui());
  for (Int i = 0; i < q; ++i) out.push_back(element_at(i));
  return out;
}

LogTables::LogTables(const FiniteField& field, const Int& budget) {
  const Int q = field.order();
  if (q > budget || q > Int(1) << 32)
    fail(ErrorKind::EnumerationBudgetExceeded, "field of order " + q.get_str() + " exceeds budget " + budget.get_str());
  q_ = q.get_ui();
  p_ = field.spec().p.get_ui();

  // Primitive element: first nonzero element (lexicographic) of order q - 1.
  const Int qm1 = q - 1;
  std::vector<Int> prime_factors;
  {
    Int n = qm1;
    for (Int d = 2; d * d <= n; ++d) {
      if (n % d == 0) {
        prime_factors.push_back(d);
        while (n % d == 0) n /= d;
      }
    }
    if (n > 1) prime_factors.push_back(n);
  }
  const FFElement one = field.one();
  std::optional<FFElement> gen;
  for (Int i = 1; i < q && !gen; ++i) {
    FFElement cand = field.element_at(i);
    bool primitive = true;
    for (const auto& r : prime_factors)
      if (weilzeta::pow(cand, qm1 / r) == one) {
        primitive = false;
        break;
      }
    if (primitive) gen = cand;
  }
  if (!gen) fail(ErrorKind::InternalError, "no primitive element");

  log_of_index_.assign(q_, 0);
  index_of_log_.assign(q_ - 1, 0);
  FFElement cur = one;
  for (std::uint64_t k = 0; k + 1 < q_; ++k) {
    const std::uint64_t idx = cur.index().get_ui();
    index_of_log_[k] = static_cast<std::uint32_t>(idx);
    log_of_index_[idx] = static_cast<Code>(k + 1);
    cur = cur * *gen;
  }
  zech_.assign(q_ - 1, 0);
  for (std::uint64_t k = 0; k + 1 < q_; ++k) {
    // add one to the constant digit
    std::uint64_t idx = index_of_log_[k];
    const std::uint64_t low = idx % p_;
    idx = idx - low + (low + 1) % p_;
    zech_[k] = log_of_index_[idx];
  }
  minus_one_ = from_int(Int(-1));
}

LogTables::Code LogTables::from_index(std::uint64_t index) const { return log_of_index_.at(index); }

std::uint64_t LogTables::to_index(Code c) const { return c == 0 ? 0 : index_of_log_.at(c - 1); }

LogTables::Code LogTables::from_int(const Int& v) const {
  Int r = v % Int(static_cast<unsigned long>(p_));
  if (r < 0) r += static_cast<unsigned long>(p_);
  return log_of_index_[r.get_ui()];
}

}  // namespace weilzeta
