// Acceptance run: one PASS/FAIL line per criterion.
//
// The exit status is nonzero when a criterion fails that is not listed in
// kKnownUnattainable. Those criteria are still checked as stated and still
// print FAIL; --strict makes every FAIL count.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "weilzeta/cmcurve.hpp"
#include "weilzeta/commands.hpp"
#include "weilzeta/dimgroup.hpp"
#include "weilzeta/pseudolattice.hpp"
#include "weilzeta/realroots.hpp"
#include "weilzeta/variety.hpp"
#include "weilzeta/zeta.hpp"

using namespace weilzeta;

namespace {

// Criterion 1 asks for functional-equation sign +1 on P^0 and P^2, where the
// exact sign is -1.
const std::set<int> kKnownUnattainable = {1};

struct Outcome {
  bool pass = true;
  std::string detail;
  void require(bool ok, const std::string& what) {
    if (ok) return;
    if (pass) detail = what;
    else if (detail.size() < 400) detail += "; " + what;
    pass = false;
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fixed(double v, int digits = 2) {
  std::ostringstream s;
  s.setf(std::ios::fixed);
  s.precision(digits);
  s << v;
  return s.str();
}

ZPoly lin(const Int& c) { return ZPoly(std::vector<Int>{Int(1), -c}); }

// |E(F_p)| by the double loop over (x, y), plus the point at infinity.
Int naive_count(long a, long b, long p) {
  std::vector<long> squares(static_cast<std::size_t>(p), 0);
  for (long y = 0; y < p; ++y) ++squares[static_cast<std::size_t>(y * y % p)];
  long n = 1;
  for (long x = 0; x < p; ++x) {
    long r = ((x * x % p * x + a * x + b) % p + p) % p;
    n += squares[static_cast<std::size_t>(r)];
  }
  return Int(n);
}

Outcome criterion1() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  for (unsigned N = 0; N <= 2; ++N)
    for (long p : {2L, 3L, 5L}) {
      const std::string tag = "P^" + std::to_string(N) + "/F_" + std::to_string(p);
      const auto v = make_variety(Int(p), Ambient::Projective, N, N, {});
      const auto res = weil_pipeline(v, RunConfig{});
      if (!res.failure.empty() || !res.z || !res.factors) {
        o.require(false, tag + ": " + res.failure);
        continue;
      }
      ZPoly den(std::vector<Int>{Int(1)});
      for (unsigned i = 0; i <= N; ++i) den = den * lin(int_pow(Int(p), i));
      o.require(res.z->num == ZPoly(std::vector<Int>{Int(1)}) && res.z->den == den, tag + ": Z = " + to_string(*res.z));
      o.require(res.factors->sign == 1, tag + ": functional-equation sign " + std::to_string(res.factors->sign));
      for (std::size_t i = 0; i < res.factors->factors.size(); ++i) {
        const ZPoly expected = i % 2 ? ZPoly(std::vector<Int>{Int(1)}) : lin(int_pow(Int(p), i / 2));
        o.require(res.factors->factors[i] == expected, tag + ": P_" + std::to_string(i) + " wrong");
      }
      o.require(res.pass(), tag + ": pipeline checks failed");
    }
  const double s = seconds_since(t0);
  o.require(s < 5, "runtime " + fixed(s) + " s");
  if (o.pass) o.detail = "9 projective spaces, " + fixed(s) + " s";
  return o;
}

struct CurveSample {
  long p, a, b;
  Int count;
};

std::vector<CurveSample> g_curves;  // shared by criteria 2 and 3

Outcome criterion2() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937 rng(20261016);
  double worst = 0;
  for (long p : {5L, 7L, 11L, 13L}) {
    std::vector<std::pair<long, long>> pairs;
    for (long a = 0; a < p; ++a)
      for (long b = 0; b < p; ++b)
        if ((4 * a * a * a + 27 * b * b) % p != 0) pairs.emplace_back(a, b);
    std::shuffle(pairs.begin(), pairs.end(), rng);
    pairs.resize(20);
    for (const auto& [a, b] : pairs) {
      const std::string tag = "y^2 = x^3 + " + std::to_string(a) + "x + " + std::to_string(b) + " / F_" + std::to_string(p);
      const auto v = weierstrass_curve(Int(a), Int(b), Int(p));
      const std::vector<Int> counts = count_series(v, 2).counts;
      const Int brute = naive_count(a, b, p);
      g_curves.push_back({p, a, b, brute});
      o.require(counts[0] == brute, tag + ": projective count " + to_string(counts[0]) + " vs " + to_string(brute));
      const Int trace = Int(p) + 1 - brute;
      const ZPoly p1 = curve_numerator(counts, Int(p), 1, NumeratorMode::Full);
      o.require(p1 == ZPoly(std::vector<Int>{Int(1), -trace, Int(p)}), tag + ": P_1 = " + to_string(p1, "t"));
      const RationalFunctionQ z{p1, lin(Int(1)) * lin(Int(p))};
      try {
        o.require(functional_equation_check(z, Int(p), 1, 0) == 1, tag + ": functional-equation sign");
      } catch (const Error& e) {
        o.require(false, tag + ": " + e.what());
      }
      const auto rh = rh_check(p1, Int(p), 1, 1e-9);
      worst = std::max(worst, rh.max_modulus_deviation);
      o.require(rh.pass && rh.max_modulus_deviation < 1e-9, tag + ": root modulus deviation " + std::to_string(rh.max_modulus_deviation));
    }
  }
  const double s = seconds_since(t0);
  o.require(s < 60, "runtime " + fixed(s) + " s");
  if (o.pass) {
    std::ostringstream d;
    d << g_curves.size() << " curves, max root deviation " << worst << ", " << fixed(s) << " s";
    o.detail = d.str();
  }
  return o;
}

Outcome criterion3() {
  Outcome o;
  o.require(!g_curves.empty(), "no curves from criterion 2");
  std::size_t violations = 0;
  for (const auto& c : g_curves) {
    const Int a = Int(c.p) + 1 - c.count;
    if (a * a > 4 * c.p) ++violations;
  }
  o.require(violations == 0, std::to_string(violations) + " Hasse violations");
  if (o.pass) o.detail = "0 violations over " + std::to_string(g_curves.size()) + " curves";
  return o;
}

Outcome criterion4() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  std::size_t primes = 0, mismatches = 0;
  for (long p = 5; p <= 997; ++p) {
    if (!is_prime(Int(p))) continue;
    ++primes;
    const Int brute_count = naive_count(-1, 0, p);
    const Int brute_trace = Int(p) + 1 - brute_count;
    const Int a = grossencharacter_trace_d1(Int(p));
    const Int via_psi = 1 - a + p;
    if (a != brute_trace || via_psi != brute_count || via_psi != ec_count(Int(-1), Int(0), Int(p))) {
      ++mismatches;
      o.require(false, "p = " + std::to_string(p) + ": a_psi = " + to_string(a) + ", brute " + to_string(brute_trace));
    }
  }
  const double s = seconds_since(t0);
  o.require(s < 30, "runtime " + fixed(s) + " s");
  if (o.pass) o.detail = std::to_string(primes) + " primes, 0 mismatches, " + fixed(s) + " s";
  return o;
}

Outcome criterion5() {
  Outcome o;
  for (long d : {2L, 3L, 5L}) {
    const std::string tag = "Z + Z sqrt " + std::to_string(d);
    Int s;
    mpz_sqrt(s.get_mpz_t(), Int(d).get_mpz_t());
    const auto f = NumberField::make(ZPoly(std::vector<Int>{Int(-d), Int(0), Int(1)}), Rat(s), Rat(s + 1));
    const auto l = make_lattice({RealAlgebraic::rational(f, Rat(1)), RealAlgebraic::generator(f)});
    const auto ring = endo_ring(l);
    o.require(ring.rank == 2, tag + ": rank " + std::to_string(ring.rank));
    for (long m = -4; m <= 4; ++m)
      for (long n = -4; n <= 4; ++n) {
        const RealAlgebraic alpha(f, {Rat(m), Rat(n)});
        const IntMatrix expected = {{Int(m), Int(n * d)}, {Int(n), Int(m)}};
        o.require(endo_matrix(l, alpha) == expected, tag + ": matrix of " + std::to_string(m) + " + " + std::to_string(n) + " sqrt d");
      }
    // Brute scan: (u + v sqrt d)/w with |u|, |v| <= 5 and 1 <= w <= 4.
    IntMatrix found;
    for (long w = 1; w <= 4; ++w)
      for (long u = -5; u <= 5; ++u)
        for (long v = -5; v <= 5; ++v) {
          const RealAlgebraic alpha(f, {Rat(u, w), Rat(v, w)});
          if (!is_endomorphism(l, alpha)) continue;
          const auto c = *lattice_coordinates(l, alpha);
          found.push_back({c[0].get_num(), c[1].get_num()});
          IntMatrix rows = ring.coords;
          rows.push_back(found.back());
          o.require(hermite_basis(rows) == ring.coords, tag + ": scan found an endomorphism outside the computed basis");
          o.require(w == 1 || (u % w == 0 && v % w == 0), tag + ": fractional endomorphism");
        }
    o.require(hermite_basis(found).size() == ring.rank, tag + ": scan rank differs");
    for (const auto& a : ring.basis)
      for (const auto& b : ring.basis) {
        const auto ma = endo_matrix(l, a), mb = endo_matrix(l, b);
        o.require(matmul(ma, mb) == matmul(mb, ma), tag + ": not commutative");
        o.require(matmul(ma, mb) == endo_matrix(l, a * b), tag + ": product law");
        IntMatrix sum = ma;
        for (std::size_t i = 0; i < 2; ++i)
          for (std::size_t j = 0; j < 2; ++j) sum[i][j] += mb[i][j];
        o.require(sum == endo_matrix(l, a + b), tag + ": sum law");
      }
  }
  if (o.pass) o.detail = "rank 2 for d = 2, 3, 5; scan and ring laws agree";
  return o;
}

Outcome criterion6() {
  Outcome o;
  const IntMatrix t = {{Int(3), Int(1)}, {Int(1), Int(1)}};
  const auto g = build(make_hecke(t));
  const auto f = g.lambda.field();
  const ZPoly mp(std::vector<Int>{Int(2), Int(-4), Int(1)});
  o.require(f->minpoly() == mp, "lambda minimal polynomial " + to_string(f->minpoly(), "x"));
  const auto iv = f->interval();
  o.require(SturmSequence(mp).count(iv) == 1, "isolating interval does not hold exactly one root");
  // 2 + sqrt 2 is the root in (3, 4]; the isolated root must be that one.
  const Rat lo = std::max(iv.lo, Rat(3)), hi = std::min(iv.hi, Rat(4));
  o.require(lo < hi && SturmSequence(mp).count(lo, hi) == 1,
            "isolating interval (" + to_string(iv.lo) + ", " + to_string(iv.hi) + "] misses 2 + sqrt 2");
  const auto c = [&](long v) { return RealAlgebraic::rational(f, Rat(v)); };
  const RealAlgebraic sqrt2 = g.lambda - c(2);
  o.require(sqrt2 * sqrt2 == c(2) && sqrt2.sign() > 0, "lambda - 2 is not sqrt 2");

  std::mt19937 rng(6);
  std::uniform_int_distribution<long> coef(-50, 50), level(0, 8);
  for (int i = 0; i < 200; ++i) {
    const DimElement x{{Int(coef(rng)), Int(coef(rng))}, static_cast<unsigned long>(level(rng))};
    const auto tv = trace_value(g, x);
    o.require(trace_value(g, {matvec(t, x.v), x.k + 1}) == tv, "level coherence");
    o.require(trace_value(g, shift(g, x)) == g.lambda * tv, "shift scaling");
  }
  const auto u = unit_decomposition(g, Int(2));
  o.require(!u.verified, "unit decomposition verified");
  o.require(u.minimal_polynomial == ZPoly(std::vector<Int>{Int(1), Int(-4), Int(2)}),
            "lambda/2 minimal polynomial " + to_string(u.minimal_polynomial, "x"));
  if (o.pass) o.detail = "lambda = 2 + sqrt 2, 200 coherent samples, lambda/2 has 2x^2 - 4x + 1, verified=false";
  return o;
}

struct ManifestEntry {
  std::string name;
  int code = 0;
  std::vector<std::string> args;
};

std::vector<ManifestEntry> read_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<ManifestEntry> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string name, code, rest, bar;
    ManifestEntry e;
    ls >> e.name >> bar >> e.code >> bar;
    std::string tok;
    while (ls >> tok) e.args.push_back(tok);
    out.push_back(std::move(e));
  }
  return out;
}

// The CLI flag set, applied to a RunConfig.
RunConfig config_from(const std::vector<std::string>& args) {
  RunConfig c;
  c.command = args.at(0);
  auto longs = [](std::string s) {
    std::replace(s.begin(), s.end(), ',', ' ');
    std::istringstream in(s);
    std::vector<long> v;
    long x;
    while (in >> x) v.push_back(x);
    return v;
  };
  for (std::size_t i = 1; i < args.size(); ++i) {
    const std::string& a = args[i];
    const auto next = [&]() -> const std::string& { return args.at(++i); };
    if (a == "--mmax") c.m_max = static_cast<unsigned>(std::stoul(next()));
    else if (a == "--budget") c.budget = Int(next());
    else if (a == "--rh-tol") c.rh_tol = std::stod(next());
    else if (a == "--weight-tol") c.weight_tol = std::stod(next());
    else if (a == "--det-check") c.det_check = Int(next());
    else if (a == "--pmin") c.pmin = Int(next());
    else if (a == "--pmax") c.pmax = Int(next());
    else if (a == "--betti") c.betti = longs(next());
    else if (a == "--degrees") {
      const auto d = longs(next());
      c.degrees = std::pair<unsigned, unsigned>(static_cast<unsigned>(d.at(0)), static_cast<unsigned>(d.at(1)));
    } else c.input = a;
  }
  return c;
}

Outcome criterion7(const std::vector<ManifestEntry>& manifest) {
  Outcome o;
  std::size_t varieties = 0, checked = 0;
  for (const auto& e : manifest) {
    if (e.args.at(0) != "weil" || e.code == 2) continue;
    const RunConfig c = config_from(e.args);
    const auto res = weil_pipeline(load_variety(c.input), c);
    if (!res.z) {
      o.require(false, e.name + ": no zeta function");
      continue;
    }
    ++varieties;
    const auto s = zeta_series(res.counts);
    const auto z = pade_reconstruct(s, static_cast<unsigned>(res.z->num.degree()), static_cast<unsigned>(res.z->den.degree()));
    o.require(z == *res.z, e.name + ": Pade reconstruction differs from the fitted Z");
    for (unsigned m = 1; m <= res.counts.size(); ++m, ++checked)
      o.require(point_count_from_zeta(z, m) == res.counts[m - 1], e.name + ": N_" + std::to_string(m));
  }
  if (o.pass) o.detail = std::to_string(varieties) + " corpus runs, " + std::to_string(checked) + " counts recovered";
  return o;
}

std::string run_entry(const ManifestEntry& e) {
  try {
    return strip_timing(run_command(config_from(e.args)).text());
  } catch (const Error& err) {
    return std::string("error: ") + err.what() + "\n";
  }
}

Outcome criterion8(const std::vector<ManifestEntry>& manifest) {
  Outcome o;
  std::vector<std::string> first;
  for (const auto& e : manifest) first.push_back(run_entry(e));
  for (std::size_t i = 0; i < manifest.size(); ++i)
    o.require(run_entry(manifest[i]) == first[i], manifest[i].name + ": second run differs");
  if (o.pass) o.detail = std::to_string(manifest.size()) + " reports byte-identical across two runs";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  std::string root = WEILZETA_SOURCE_DIR;
  bool strict = false;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--strict") strict = true;
    else if (a == "--root" && i + 1 < argc) root = argv[++i];
    else {
      std::cerr << "usage: acceptance [--strict] [--root DIR]\n";
      return 2;
    }
  }
  std::filesystem::current_path(root);
  const auto manifest = read_manifest("corpus/golden/manifest.txt");

  const std::vector<std::pair<int, std::function<Outcome()>>> criteria = {
      {1, criterion1},
      {2, criterion2},
      {3, criterion3},
      {4, criterion4},
      {5, criterion5},
      {6, criterion6},
      {7, [&] { return criterion7(manifest); }},
      {8, [&] { return criterion8(manifest); }},
  };
  int unexpected = 0;
  for (const auto& [id, fn] : criteria) {
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    std::cout << "criterion " << id << ": " << (o.pass ? "PASS" : "FAIL") << " - " << o.detail;
    if (!o.pass && kKnownUnattainable.count(id)) std::cout << " [known unattainable, see README]";
    std::cout << std::endl;
    if (!o.pass && (strict || !kKnownUnattainable.count(id))) ++unexpected;
  }
  return unexpected == 0 ? 0 : 1;
}
