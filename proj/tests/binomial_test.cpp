#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fct/binomial.hpp"
#include "fct/triangle.hpp"

using fct::BigInt;
using fct::binomial;

TEST_CASE("standard values") {
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(10, 0) == 1);
  CHECK(binomial(10, 10) == 1);
  CHECK(binomial(52, 5) == 2598960);
  CHECK(binomial(5, 6) == 0);
  CHECK(binomial(5, -2) == 0);
}

TEST_CASE("negative lower index") {
  // Calibrated so the p = 1 triangle recurrence reproduces its known rows:
  // C(-1,-1) = 1 and C(m,-1) = 0 otherwise.
  CHECK(binomial(-1, -1) == 1);
  CHECK(binomial(3, -1) == 0);
  CHECK(binomial(0, -1) == 0);
  CHECK(binomial(-2, -1) == 0);
}

TEST_CASE("negative upper index follows Pascal's rule") {
  CHECK(binomial(-1, 0) == 1);
  CHECK(binomial(-1, 1) == -1);
  CHECK(binomial(-1, 2) == 1);
  CHECK(binomial(-2, 1) == -2);
  CHECK(binomial(-2, 2) == 3);
  CHECK(binomial(-2, -2) == 1);
  CHECK(binomial(-3, -2) == 0);

  // C(n,k) = C(n-1,k-1) + C(n-1,k) everywhere except (0,0).
  for (long long n = -6; n <= 6; ++n) {
    for (long long k = -6; k <= 6; ++k) {
      if (n == 0 && k == 0) {
        continue;
      }
      CAPTURE(n);
      CAPTURE(k);
      CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
    }
  }
}

TEST_CASE("binomial identity") {
  CHECK(fct::verify_binomial_identity_e4(5, 0));
  // m=3, h=2: both sides are 3*6 - 3*3 + 1 = 10.
  CHECK(fct::verify_binomial_identity_e4(3, 2));

  for (int m = 0; m <= 12; ++m) {
    for (int h = 0; h <= 12; ++h) {
      CAPTURE(m);
      CAPTURE(h);
      CHECK(fct::verify_binomial_identity_e4(m, h));
    }
  }

  CHECK_THROWS_AS(fct::verify_binomial_identity_e4(-1, 0),
                  std::invalid_argument);
}

TEST_CASE("fuss-catalan numbers") {
  CHECK(fct::fuss_catalan(2, 4) == 14);  // Catalan C_4
  for (int n = 0; n <= 40; ++n) {
    CHECK(fct::fuss_catalan(1, n) == 1);
  }
  CHECK(fct::fuss_catalan(5, 4) == 285);
  CHECK(fct::fuss_catalan(5, 10) == 250543370);
  CHECK(fct::fuss_catalan(3, 7) == 7752);
  CHECK(fct::fuss_catalan(2, 0) == 1);

  // Well beyond 64 bits.
  CHECK(fct::fuss_catalan(10, 30) ==
        BigInt("639089395384736210457971239482408898160"));

  CHECK_THROWS_AS(fct::fuss_catalan(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(fct::fuss_catalan(2, -1), std::invalid_argument);
}
