#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "hhd/recurrences.hpp"

using namespace hhd::recurrences;

TEST_CASE("alpha") {
  CHECK(alpha(2, 2) == 0.0);
  CHECK(alpha(2, 1) == doctest::Approx(-std::sqrt(2.0 / 15.0)).epsilon(1e-15));
  CHECK(alpha(2, 1) == doctest::Approx(-0.3651484).epsilon(1e-7));
  CHECK(alpha(1, 0) == doctest::Approx(-0.8164966).epsilon(1e-7));
  for (int l = 1; l < 50; ++l)
    for (int m = 0; m <= l; ++m) CHECK(alpha(l, m) <= 0.0);
  CHECK_THROWS_AS(alpha(0, 0), std::domain_error);
  CHECK_THROWS_AS(alpha(1, 2), std::domain_error);
  CHECK_THROWS_AS(alpha(3, -1), std::domain_error);
}

TEST_CASE("beta") {
  CHECK(beta(0, 0) == 0.0);
  CHECK(beta(1, 1) == doctest::Approx(0.6324555).epsilon(1e-7));
  CHECK(beta(3, 2) == doctest::Approx(std::sqrt(30.0 / 63.0)).epsilon(1e-15));
  CHECK(beta(3, 2) == doctest::Approx(0.6900656).epsilon(1e-7));
  for (int l = 0; l < 50; ++l)
    for (int m = 0; m <= l + 1; ++m)
      if (l + m >= 1) CHECK(beta(l, m) > 0.0);
  CHECK_THROWS_AS(beta(-1, 0), std::domain_error);
}

TEST_CASE("gamma") {
  CHECK(gamma(1, 1) == 0.0);
  CHECK(gamma(2, 1) == doctest::Approx(-3.0 * std::sqrt(0.2)).epsilon(1e-15));
  CHECK(gamma(2, 1) == doctest::Approx(-1.3416408).epsilon(1e-7));
  CHECK(gamma(2, 0) == doctest::Approx(-1.5491933).epsilon(1e-7));
  for (int l = 1; l < 50; ++l)
    for (int m = 0; m <= l; ++m) CHECK(gamma(l, m) <= 0.0);
  CHECK_THROWS_AS(gamma(0, 0), std::domain_error);
  CHECK_THROWS_AS(gamma(2, 3), std::domain_error);
}

TEST_CASE("delta") {
  CHECK(delta(0, 0) == 0.0);
  CHECK(delta(1, 1) == doctest::Approx(0.4472136).epsilon(1e-7));
  CHECK(delta(2, 1) == doctest::Approx(2.0 * std::sqrt(8.0 / 35.0)).epsilon(1e-15));
  CHECK(delta(2, 1) == doctest::Approx(0.9561829).epsilon(1e-7));
  for (int l = 1; l < 50; ++l)
    for (int m = 0; m <= l; ++m) CHECK(delta(l, m) > 0.0);
  CHECK_THROWS_AS(delta(1, 2), std::domain_error);
}

TEST_CASE("Cholesky entries at small indices") {
  CHECK(std::abs(chol_d(1, 2) - std::sqrt(32.0 / 7.0)) <= 1e-15);
  CHECK(std::abs(chol_e(1, 2) - std::sqrt(0.5)) <= 1e-15);
  CHECK(std::abs(chol_f(1, 2) - std::sqrt(25.0 / 42.0)) <= 1e-15);
  CHECK(chol_d(1, 2) == doctest::Approx(2.1380899).epsilon(1e-7));
  CHECK(chol_e(1, 2) == doctest::Approx(0.7071068).epsilon(1e-7));
  CHECK(chol_f(1, 2) == doctest::Approx(0.7715167).epsilon(1e-7));
  CHECK(std::abs(chol_d(1, 1) - std::sqrt(6.0 / 5.0)) <= 1e-15);
  CHECK(chol_e(1000000, 1) < 1.0);
  CHECK_THROWS_AS(chol_d(0, 1), std::domain_error);
  CHECK_THROWS_AS(chol_e(1, 0), std::domain_error);
  CHECK_THROWS_AS(chol_f(0, 0), std::domain_error);
}

TEST_CASE("Cholesky entry inequalities") {
  // Upper bounds and row sums over a moderate grid; the acceptance run covers l <= 10^4, m <= 100.
  for (int m = 1; m <= 30; ++m)
    for (int l = 1; l <= 2000; ++l) {
      const double d = chol_d(l, m), e = chol_e(l, m), f = chol_f(l, m);
      REQUIRE(d > 0.0);
      REQUIRE(e >= 0.0);
      REQUIRE(f >= 0.0);
      REQUIRE(d <= (l + 2.0 * m) / 2.0);
      REQUIRE(e <= 1.0);
      REQUIRE(f <= (l + 1.0) / 2.0);
      if (m >= 2) REQUIRE(d - e - f >= m - 1.5);
      REQUIRE(chol_d(l + 1, m) > d);
    }
}

TEST_CASE("m = 1 ratio bounds") {
  for (int l = 1; l <= 10000; ++l) {
    const double L = l;
    const double d = chol_d(l, 1);
    REQUIRE(chol_e(l, 1) / d <= 2.0 / (L + 1.0));
    REQUIRE(chol_f(l, 1) / d <= 1.0 - 1.0 / L + 5.0 / (2.0 * L * (L + 2.0)));
  }
}
