#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "weilzeta/polynomial.hpp"

namespace weilzeta {

/// Default cap on the number of objects any enumeration may visit.
inline const Int kDefaultBudget = Int(1) << 24;

/// F_{p^m} presented as F_p[x]/(modulus). For m = 1 the modulus is x.
struct FieldSpec {
  Int p;
  unsigned m = 1;
  ZPoly modulus;

  Int order() const { return int_pow(p, m); }
  friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
    return a.p == b.p && a.m == b.m && a.modulus == b.modulus;
  }
};

class FiniteField;

class FFElement {
 public:
  FFElement(std::shared_ptr<const FieldSpec> field, std::vector<Int> coeffs);

  const FieldSpec& field() const { return *field_; }
  const std::shared_ptr<const FieldSpec>& field_ptr() const { return field_; }
  /// Exactly m coefficients, low-to-high, each in [0, p).
  const std::vector<Int>& coeffs() const { return coeffs_; }
  bool is_zero() const;
  /// Position in the lexicographic enumeration: sum_i c_i p^i.
  Int index() const;

  FFElement operator-() const;
  friend FFElement operator+(const FFElement& a, const FFElement& b);
  friend FFElement operator-(const FFElement& a, const FFElement& b);
  friend FFElement operator*(const FFElement& a, const FFElement& b);
  friend FFElement operator/(const FFElement& a, const FFElement& b);
  friend bool operator==(const FFElement& a, const FFElement& b);

 private:
  std::shared_ptr<const FieldSpec> field_;
  std::vector<Int> coeffs_;
};

/// Multiplicative inverse via extended Euclid; throws DivisionByZero for 0.
FFElement inv(const FFElement& a);
/// Square-and-multiply, e >= 0.
FFElement pow(const FFElement& a, const Int& e);
std::string to_string(const FFElement& a);

class FiniteField {
 public:
  /// Smallest monic irreducible modulus of degree m in lexicographic order of
  /// the low-to-high coefficient tuple.
  static FiniteField make(const Int& p, long m);

  const FieldSpec& spec() const { return *spec_; }
  const std::shared_ptr<const FieldSpec>& spec_ptr() const { return spec_; }
  Int order() const { return spec_->order(); }

  FFElement zero() const;
  FFElement one() const;
  /// The class of x (the prime-field element 0 when m = 1).
  FFElement generator() const;
  FFElement from_int(const Int& v) const;
  FFElement from_coeffs(std::vector<Int> coeffs) const;
  FFElement element_at(const Int& index) const;

  /// All q elements in lexicographic order starting at 0.
  std::vector<FFElement> enumerate(const Int& budget = kDefaultBudget) const;

 private:
  explicit FiniteField(std::shared_ptr<const FieldSpec> spec) : spec_(std::move(spec)) {}
  std::shared_ptr<const FieldSpec> spec_;
};

/// Zech-logarithm tables for one field, built once from the exact arithmetic
/// above. Elements are encoded as 0 (zero) or 1 + k for g^k, g primitive.
class LogTables {
 public:
  using Code = std::uint32_t;

  LogTables(const FiniteField& field, const Int& budget = kDefaultBudget);

  std::uint64_t order() const { return q_; }
  Code zero() const { return 0; }
  Code one() const { return 1; }
  Code from_index(std::uint64_t index) const;
  std::uint64_t to_index(Code c) const;
  Code from_int(const Int& v) const;

  Code mul(Code a, Code b) const {
    if (a == 0 || b == 0) return 0;
    std::uint64_t s = static_cast<std::uint64_t>(a - 1) + (b - 1);
    if (s >= q_ - 1) s -= q_ - 1;
    return static_cast<Code>(s + 1);
  }
  Code add(Code a, Code b) const {
    if (a == 0) return b;
    if (b == 0) return a;
    // g^i + g^j = g^i (1 + g^{j-i})
    std::uint64_t d = (b >= a) ? (b - a) : (b + (q_ - 1) - a);
    const std::uint32_t z = zech_[d];
    if (z == 0) return 0;
    return mul(a, z);
  }
  Code neg(Code a) const { return mul(a, minus_one_); }
  Code pow(Code a, std::uint64_t e) const {
    if (e == 0) return 1;
    if (a == 0) return 0;
    const std::uint64_t l = ((a - 1) * (e % (q_ - 1))) % (q_ - 1);
    return static_cast<Code>(l + 1);
  }

 private:
  std::uint64_t q_;
  std::uint64_t p_;
  Code minus_one_;
  std::vector<Code> log_of_index_;      // index -> code
  std::vector<std::uint32_t> index_of_log_;  // k -> index of g^k
  std::vector<Code> zech_;              // k -> code of 1 + g^k
};

}  // namespace weilzeta
