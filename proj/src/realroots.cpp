#include "weilzeta/realroots.hpp"

namespace weilzeta {

int sign_at(const ZPoly& f, const Rat& x) { return sgn(eval(f, x)); }

SturmSequence::SturmSequence(const ZPoly& f) : base_(f) {
  if (f.is_zero()) fail(ErrorKind::InvalidArgument, "Sturm sequence of the zero polynomial");
  // Work with the square-free part so multiple roots are counted once.
  QPoly fq = to_rational(f);
  QPoly g = gcd(fq, fq.derivative());
  QPoly p0 = g.degree() >= 1 ? divmod(fq, g).first : fq;
  chain_.push_back(p0);
  chain_.push_back(p0.derivative());
  while (!chain_.back().is_zero()) {
    QPoly r = divmod(chain_[chain_.size() - 2], chain_.back()).second;
    chain_.push_back(-r);
  }
  chain_.pop_back();
}

int SturmSequence::sign_changes(const Rat& x) const {
  int changes = 0;
  int prev = 0;
  for (const auto& p : chain_) {
    const int s = sgn(p.eval(x));
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

int SturmSequence::count(const Rat& lo, const Rat& hi) const {
  if (hi < lo) return 0;
  return sign_changes(lo) - sign_changes(hi);
}

Rat root_bound(const ZPoly& f) {
  if (f.degree() < 1) return Rat(1);
  Rat m = 0;
  for (int i = 0; i < f.degree(); ++i) {
    Rat r = Rat(abs(f.coeffs()[static_cast<std::size_t>(i)])) / Rat(abs(f.leading()));
    if (r > m) m = r;
  }
  return m + 1;
}

namespace {

void isolate(const SturmSequence& s, const Rat& lo, const Rat& hi, std::vector<RatInterval>& out) {
  const int n = s.count(lo, hi);
  if (n == 0) return;
  if (n == 1) {
    if (sign_at(s.base(), hi) == 0)
      out.push_back({hi, hi});
    else
      out.push_back({lo, hi});
    return;
  }
  const Rat mid = (lo + hi) / 2;
  isolate(s, lo, mid, out);
  isolate(s, mid, hi, out);
}

}  // namespace

std::vector<RatInterval> isolate_real_roots(const ZPoly& f) {
  std::vector<RatInterval> out;
  if (f.degree() < 1) return out;
  const SturmSequence s(f);
  const Rat b = root_bound(f);
  isolate(s, -b, b, out);
  return out;
}

RatInterval refine(const SturmSequence& sturm, RatInterval iv, const Rat& width) {
  while (!iv.is_point() && iv.width() >= width) {
    const Rat mid = iv.midpoint();
    if (sign_at(sturm.base(), mid) == 0) return {mid, mid};
    if (sturm.count(iv.lo, mid) > 0)
      iv.hi = mid;
    else
      iv.lo = mid;
  }
  return iv;
}

}  // namespace weilzeta
