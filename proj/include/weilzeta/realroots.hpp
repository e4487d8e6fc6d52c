#pragma once

#include <vector>

#include "weilzeta/polynomial.hpp"

namespace weilzeta {

/// Half-open rational interval (lo, hi]. lo == hi denotes the exact point.
struct RatInterval {
  Rat lo;
  Rat hi;

  bool is_point() const { return lo == hi; }
  Rat width() const { return hi - lo; }
  Rat midpoint() const { return (lo + hi) / 2; }
};

int sign_at(const ZPoly& f, const Rat& x);

class SturmSequence {
 public:
  explicit SturmSequence(const ZPoly& f);

  int sign_changes(const Rat& x) const;
  /// Number of distinct real roots in (lo, hi].
  int count(const Rat& lo, const Rat& hi) const;
  int count(const RatInterval& iv) const {
    return iv.is_point() ? (sign_at(base(), iv.lo) == 0 ? 1 : 0) : count(iv.lo, iv.hi);
  }
  const ZPoly& base() const { return base_; }

 private:
  ZPoly base_;
  std::vector<QPoly> chain_;
};

/// Bound B with every real root in (-B, B).
Rat root_bound(const ZPoly& f);

/// Disjoint isolating intervals of the distinct real roots, ascending.
std::vector<RatInterval> isolate_real_roots(const ZPoly& f);

/// Shrink an isolating interval of a root of f below `width`.
RatInterval refine(const SturmSequence& sturm, RatInterval iv, const Rat& width);

}  // namespace weilzeta
