#include <doctest.h>

#include "oracles.hpp"
#include "weilzeta/cmcurve.hpp"
#include "weilzeta/variety.hpp"

using namespace weilzeta;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InternalError;
}

long naive_trace(long a, long b, long p) { return p + 1 - oracle::ec_count_naive(a, b, p); }

}  // namespace

TEST_CASE("frobenius_trace examples") {
  CHECK(frobenius_trace(Int(-1), Int(0), Int(5)) == -2);
  CHECK(frobenius_trace(Int(-1), Int(0), Int(7)) == 0);
  CHECK(frobenius_trace(Int(-1), Int(0), Int(13)) == 6);
  CHECK(kind_of([] { frobenius_trace(Int(0), Int(0), Int(5)); }) == ErrorKind::SingularCurve);
}

TEST_CASE("two_squares") {
  for (long p = 5; p < 2000; ++p) {
    if (!is_prime(Int(p)) || p % 4 != 1) continue;
    auto [x, y] = two_squares(Int(p));
    CHECK(x * x + y * y == p);
    CHECK(x >= y);
    CHECK(y > 0);
  }
  CHECK(kind_of([] { two_squares(Int(7)); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("grossencharacter_trace_d1 examples and errors") {
  CHECK(grossencharacter_trace_d1(Int(5)) == -2);
  CHECK(grossencharacter_trace_d1(Int(13)) == 6);
  CHECK(grossencharacter_trace_d1(Int(7)) == 0);
  CHECK(kind_of([] { grossencharacter_trace_d1(Int(3)); }) == ErrorKind::UnsupportedCharacteristic);
  CHECK(kind_of([] { grossencharacter_trace_d1(Int(9)); }) == ErrorKind::InvalidPrime);
}

TEST_CASE("grossencharacter agrees with brute force for p < 300") {
  for (long p = 5; p < 300; ++p) {
    if (!is_prime(Int(p))) continue;
    CHECK(grossencharacter_trace_d1(Int(p)) == naive_trace(-1, 0, p));
  }
}

TEST_CASE("frobenius_eigenvalues") {
  const auto d = frobenius_eigenvalues(Int(-2), Int(5));
  CHECK(d.disc == -16);
  CHECK(d.eigen_sum() == -2);
  CHECK(d.eigen_product() == 5);
  CHECK(d.squared_modulus() == 5);
  CHECK(d.eigenvalue_string(1) == "-1 + 2*i");
  CHECK(d.eigenvalue_string(2) == "-1 - 2*i");
  // (lambda + 1)^2 + 4 = lambda^2 + 2 lambda + 5 at lambda = -1 + 2i.
  const GaussianInt l{Int(-1), Int(2)};
  CHECK(l * l + GaussianInt{Int(2), Int(0)} * l + GaussianInt{Int(5), Int(0)} == GaussianInt{Int(0), Int(0)});

  const auto pure = frobenius_eigenvalues(Int(0), Int(7));
  CHECK(pure.eigenvalue_string(1) == "i*sqrt(7)");
  CHECK(pure.eigen_product() == 7);

  const auto dbl = frobenius_eigenvalues(Int(2), Int(1));
  CHECK(dbl.disc == 0);
  CHECK(dbl.eigenvalue_string(1) == "1");
  CHECK(dbl.eigen_product() == 1);
  CHECK(frobenius_eigenvalues(Int(5), Int(4)).eigenvalue_string(1) == "4");
  CHECK(frobenius_eigenvalues(Int(3), Int(1)).eigenvalue_string(2) == "3/2 - 1/2*sqrt(5)");

  for (long q : {2L, 3L, 5L, 49L})
    for (long a = -12; a <= 12; ++a) {
      const auto f = frobenius_eigenvalues(Int(a), Int(q));
      CHECK(f.eigen_sum() == a);
      CHECK(f.eigen_product() == q);
      if (f.disc < 0) CHECK(f.squared_modulus() == q);
    }
}

TEST_CASE("count_via_character") {
  CHECK(count_via_character(Int(-2), Int(5)) == 8);
  CHECK(count_via_character(Int(0), Int(7)) == 8);
  CHECK(count_via_character(Int(1), Int(1)) == 1);
  CHECK(kind_of([] { count_via_character(Int(0), Int(0)); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([] { count_via_character(Int(5), Int(5)); }) == ErrorKind::HasseViolation);
  for (long p : {5L, 7L, 11L, 13L})
    for (long a = 0; a < p; ++a)
      for (long b = 0; b < p; ++b) {
        if ((4 * a * a * a + 27 * b * b) % p == 0) continue;
        CHECK(count_via_character(frobenius_trace(Int(a), Int(b), Int(p)), Int(p)) == oracle::ec_count_naive(a, b, p));
      }
}

TEST_CASE("N_m recursion matches enumeration over F_{p^2}") {
  for (long p : {5L, 7L, 11L, 13L})
    for (long a = 0; a < p; a += 3)
      for (long b = 1; b < p; b += 4) {
        if ((4 * a * a * a + 27 * b * b) % p == 0) continue;
        const auto v = weierstrass_curve(Int(a), Int(b), Int(p));
        const auto counts = count_series(v, 2).counts;
        CHECK(counts_from_trace(frobenius_trace(Int(a), Int(b), Int(p)), Int(p), 2) == counts);
      }
  CHECK(counts_from_trace(Int(-2), Int(5), 3) == oracle::counts_from_gaussian(-1, 2, 5, 3));
}
