#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fraccalc/special.hpp"

#include <cmath>
#include <stdexcept>

using namespace fraccalc;

TEST_CASE("gamma at half-integers and integers") {
  // Gamma(1/2) = sqrt(pi), Gamma(5/2) = 3/4 sqrt(pi)
  CHECK(gamma_fn(0.5) == doctest::Approx(1.7724538509055161).epsilon(1e-13));
  CHECK(gamma_fn(1.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(gamma_fn(2.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(gamma_fn(2.5) == doctest::Approx(1.3293403881791372).epsilon(1e-13));
  CHECK(gamma_fn(5.0) == doctest::Approx(24.0).epsilon(1e-13));
  CHECK(gamma_fn(10.0) == doctest::Approx(362880.0).epsilon(1e-12));
}

TEST_CASE("gamma recurrence x Gamma(x) = Gamma(x+1)") {
  for (double x = 0.05; x < 8.0; x += 0.173) {
    CHECK(x * gamma_fn(x) ==
          doctest::Approx(gamma_fn(x + 1.0)).epsilon(1e-12));
  }
}

TEST_CASE("gamma domain") {
  CHECK_THROWS_AS(gamma_fn(0.0), std::domain_error);
  CHECK_THROWS_AS(gamma_fn(-1.5), std::domain_error);
}

TEST_CASE("reciprocal gamma vanishes at nonpositive integers") {
  CHECK(rgamma(0.0) == 0.0);
  CHECK(rgamma(-1.0) == 0.0);
  CHECK(rgamma(-2.0) == 0.0);
  CHECK(rgamma(-7.0) == 0.0);
  for (double x = 0.1; x < 6.0; x += 0.31)
    CHECK(rgamma(x) == doctest::Approx(1.0 / gamma_fn(x)).epsilon(1e-12));
  // continuity through the zero: small on both sides
  CHECK(std::abs(rgamma(1e-8)) < 1e-7);
  CHECK(std::abs(rgamma(-1e-8)) < 1e-7);
}

TEST_CASE("beta identities") {
  const double pi = 3.14159265358979323846;
  CHECK(beta_fn(0.5, 0.5) == doctest::Approx(pi).epsilon(1e-13));
  CHECK(beta_fn(1.0, 1.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(beta_fn(2.0, 3.0) == doctest::Approx(1.0 / 12.0).epsilon(1e-13));
  // symmetry and the gamma quotient
  for (double p = 0.3; p < 3.0; p += 0.7)
    for (double q = 0.2; q < 3.0; q += 0.8) {
      CHECK(beta_fn(p, q) == doctest::Approx(beta_fn(q, p)).epsilon(1e-13));
      CHECK(beta_fn(p, q) ==
            doctest::Approx(gamma_fn(p) * gamma_fn(q) / gamma_fn(p + q))
                .epsilon(1e-12));
    }
}
