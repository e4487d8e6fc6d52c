#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "weilzeta/ffield.hpp"

using namespace weilzeta;

namespace {

// Lexicographically first irreducible found by the exhaustive oracle.
std::vector<long> first_irreducible(long p, std::size_t m) {
  long total = 1;
  for (std::size_t i = 0; i < m; ++i) total *= p;
  std::vector<std::vector<long>> candidates;
  for (long idx = 0; idx < total; ++idx) {
    std::vector<long> c(m + 1, 0);
    long r = idx;
    for (std::size_t i = m; i-- > 0;) {
      c[i] = r % p;
      r /= p;
    }
    c[m] = 1;
    if (oracle::irreducible_by_scan(c, p)) return c;
  }
  return {};
}

std::vector<long> as_longs(const ZPoly& p) {
  std::vector<long> out;
  for (const auto& v : p.coeffs()) out.push_back(v.get_si());
  return out;
}

}  // namespace

TEST_CASE("make_field picks the lexicographically smallest irreducible modulus") {
  CHECK(as_longs(FiniteField::make(Int(5), 1).spec().modulus) == std::vector<long>{0, 1});
  CHECK(as_longs(FiniteField::make(Int(2), 2).spec().modulus) == std::vector<long>{1, 1, 1});
  CHECK(as_longs(FiniteField::make(Int(3), 2).spec().modulus) == std::vector<long>{1, 0, 1});
  for (long p : {2L, 3L, 5L, 7L})
    for (std::size_t m : {2u, 3u, 4u})
      CHECK(as_longs(FiniteField::make(Int(p), static_cast<long>(m)).spec().modulus) == first_irreducible(p, m));
}

TEST_CASE("make_field errors and determinism") {
  CHECK_THROWS_AS(FiniteField::make(Int(4), 1), Error);
  try {
    FiniteField::make(Int(9), 2);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidPrime);
  }
  try {
    FiniteField::make(Int(5), 0);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidDegree);
  }
  CHECK(FiniteField::make(Int(7), 3).spec() == FiniteField::make(Int(7), 3).spec());
}

TEST_CASE("field arithmetic examples") {
  const auto f5 = FiniteField::make(Int(5), 1);
  CHECK(f5.from_int(3) * f5.from_int(4) == f5.from_int(2));

  const auto f4 = FiniteField::make(Int(2), 2);
  const auto x = f4.generator();
  CHECK(x * x == x + f4.one());

  const auto f9 = FiniteField::make(Int(3), 2);
  CHECK_THROWS_AS(inv(f9.zero()), Error);
  try {
    (void)(f4.one() + f9.one());
    FAIL("mismatched fields accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::FieldMismatch);
  }
}

TEST_CASE("field axioms on random samples") {
  std::mt19937_64 rng(1234);
  for (auto [p, m] : {std::pair{2L, 3L}, {3L, 2L}, {5L, 3L}, {7L, 2L}, {13L, 1L}}) {
    const auto field = FiniteField::make(Int(p), m);
    const Int q = field.order();
    std::uniform_int_distribution<unsigned long> pick(0, q.get_ui() - 1);
    for (int i = 0; i < 1000; ++i) {
      const auto a = field.element_at(Int(pick(rng)));
      const auto b = field.element_at(Int(pick(rng)));
      const auto c = field.element_at(Int(pick(rng)));
      CHECK((a + b) + c == a + (b + c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(pow(a, q) == a);
      if (!a.is_zero()) CHECK(a * inv(a) == field.one());
    }
  }
}

TEST_CASE("enumerate_field order and uniqueness") {
  const auto f2 = FiniteField::make(Int(2), 1).enumerate();
  REQUIRE(f2.size() == 2);
  CHECK(f2[0].is_zero());

  const auto f4 = FiniteField::make(Int(2), 2);
  const auto e4 = f4.enumerate();
  REQUIRE(e4.size() == 4);
  CHECK(e4[0] == f4.zero());
  CHECK(e4[1] == f4.one());
  CHECK(e4[2] == f4.generator());
  CHECK(e4[3] == f4.generator() + f4.one());

  for (auto [p, m] : {std::pair{3L, 2L}, {2L, 10L}, {7L, 4L}, {97L, 2L}, {10007L, 1L}}) {
    const auto field = FiniteField::make(Int(p), m);
    if (field.order() > 10000) {
      CHECK_THROWS_AS(field.enumerate(Int(10000)), Error);
      continue;
    }
    const auto all = field.enumerate();
    std::set<std::vector<Int>> seen;
    for (const auto& e : all) seen.insert(e.coeffs());
    CHECK(seen.size() == field.order());
    CHECK(all.size() == field.order());
  }
}

TEST_CASE("log tables agree with exact arithmetic") {
  for (auto [p, m] : {std::pair{2L, 4L}, {3L, 3L}, {5L, 2L}, {11L, 1L}}) {
    const auto field = FiniteField::make(Int(p), m);
    const LogTables t(field);
    const auto all = field.enumerate();
    for (const auto& a : all)
      for (const auto& b : all) {
        const auto ca = t.from_index(a.index().get_ui()), cb = t.from_index(b.index().get_ui());
        CHECK(t.to_index(t.mul(ca, cb)) == (a * b).index().get_ui());
        CHECK(t.to_index(t.add(ca, cb)) == (a + b).index().get_ui());
      }
    for (const auto& a : all) {
      const auto ca = t.from_index(a.index().get_ui());
      CHECK(t.to_index(t.neg(ca)) == (-a).index().get_ui());
      CHECK(t.to_index(t.pow(ca, 5)) == pow(a, Int(5)).index().get_ui());
    }
  }
}
