#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <numbers>

#include "hhd/pointwise.hpp"
#include "hhd/rng.hpp"
#include "hhd/solver.hpp"
#include "support.hpp"

using namespace hhd;
using namespace hhd::pointwise;

TEST_CASE("Gauss-Legendre rule") {
  const auto three = gauss_legendre(3);
  CHECK(three.nodes[0] == doctest::Approx(-std::sqrt(0.6)).epsilon(1e-15));
  CHECK(std::abs(three.nodes[1]) <= 1e-16);
  CHECK(three.weights[0] == doctest::Approx(5.0 / 9.0).epsilon(1e-15));
  CHECK(three.weights[1] == doctest::Approx(8.0 / 9.0).epsilon(1e-15));

  for (int count : {1, 2, 5, 12, 31, 64}) {
    const auto g = gauss_legendre(count);
    for (int k = 1; k < count; ++k) CHECK(g.nodes[k] > g.nodes[k - 1]);
    for (int p = 0; p <= 2 * count - 1; ++p) {
      double q = 0.0;
      for (int i = 0; i < count; ++i) q += g.weights[i] * std::pow(g.nodes[i], p);
      const double exact = p % 2 == 1 ? 0.0 : 2.0 / (p + 1);
      REQUIRE(std::abs(q - exact) <= 1e-13);
    }
  }
  CHECK_THROWS_AS(gauss_legendre(0), std::invalid_argument);
}

TEST_CASE("normalized Legendre values") {
  for (double x : {-1.0, -0.3, 0.0, 0.8, 1.0}) CHECK(legendre_norm(0, 0, x) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
  CHECK(legendre_norm(1, 0, 1.0) == doctest::Approx(1.2247449).epsilon(1e-7));
  // Frozen from mpmath (Ferrers functions, phase removed).
  CHECK(legendre_norm(3, 2, 0.4) == doctest::Approx(0.86074386434060623).epsilon(1e-14));
  CHECK(legendre_norm(20, 7, -0.3) == doctest::Approx(0.34637325718268948).epsilon(1e-13));
  CHECK(legendre_norm(5, 0, 0.9) == doctest::Approx(-0.0964847836894175).epsilon(1e-13));
  CHECK(legendre_norm(12, 12, 0.2) == doctest::Approx(1.1110620855812752).epsilon(1e-14));
  CHECK(legendre_norm(1, 1, 0.5) > 0.0);
  CHECK_THROWS_AS(legendre_norm(2, 3, 0.1), std::domain_error);
  CHECK_THROWS_AS(legendre_norm(2, 1, 1.5), std::domain_error);
}

TEST_CASE("normalized Legendre orthonormality") {
  const auto g = gauss_legendre(25);
  for (int m = 0; m <= 20; ++m)
    for (int l = m; l <= 20; ++l)
      for (int k = m; k <= 20; ++k) {
        double q = 0.0;
        for (int i = 0; i < 25; ++i) q += g.weights[i] * legendre_norm(l, m, g.nodes[i]) * legendre_norm(k, m, g.nodes[i]);
        REQUIRE(std::abs(q - (l == k ? 1.0 : 0.0)) <= 1e-13);
      }
}

TEST_CASE("Y and Z values") {
  CHECK(eval_Y(0, 0, 0.3, 2.0) == doctest::Approx(0.2820948).epsilon(1e-7));
  CHECK(eval_Y(0, 0, 0.3, 2.0) == doctest::Approx(1.0 / std::sqrt(4.0 * std::numbers::pi)).epsilon(1e-15));
  for (double theta : {0.1, 1.0, 2.9}) CHECK(eval_Z(0, 1, theta, 0.0) == doctest::Approx(0.3989423).epsilon(1e-7));
  CHECK(eval_Y(3, -2, 1.0, 0.3) == doctest::Approx(0.31221112713973315).epsilon(1e-14));
  CHECK(eval_Z(4, 3, 0.7, 1.2) == doctest::Approx(-0.54491228575727118).epsilon(1e-14));
  CHECK(eval_Z(2, 0, 0.7, 1.2) == doctest::Approx(0.38065380808526009).epsilon(1e-14));
  CHECK_THROWS_AS(eval_Y(1, 2, 0.5, 0.5), std::domain_error);
  CHECK_THROWS_AS(eval_Z(0, 0, 0.5, 0.5), std::domain_error);
  CHECK_THROWS_AS(eval_Z(0, 2, 0.5, 0.5), std::domain_error);
}

TEST_CASE("Z orthonormality on the sphere") {
  const int n = 10;
  const auto grid = GridSpec::for_degree(n);
  std::vector<std::pair<int, int>> idx;
  for (int m = -(n + 1); m <= n + 1; ++m)
    for (int l = std::max(std::abs(std::abs(m) - 1), m == 0 ? 1 : 0); l <= n; ++l) idx.push_back({l, m});
  std::vector<std::vector<double>> samples;
  for (auto [l, m] : idx) {
    std::vector<double> s;
    for (int i = 0; i < grid.n_theta; ++i)
      for (int j = 0; j < grid.n_phi; ++j) s.push_back(eval_Z(l, m, grid.theta[i], grid.phi[j]));
    samples.push_back(std::move(s));
  }
  const double dphi = 2.0 * std::numbers::pi / grid.n_phi;
  double worst = 0.0;
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = a; b < idx.size(); ++b) {
      double q = 0.0;
      for (int i = 0; i < grid.n_theta; ++i)
        for (int j = 0; j < grid.n_phi; ++j) {
          const std::size_t k = i * grid.n_phi + j;
          q += grid.weights[i] * dphi * samples[a][k] * samples[b][k];
        }
      worst = std::max(worst, std::abs(q - (a == b ? 1.0 : 0.0)));
    }
  CHECK(worst <= 1e-12);
}

TEST_CASE("surface gradient") {
  const auto zero = eval_gradY(0, 0, 1.0, 1.0);
  CHECK(zero.theta == 0.0);
  CHECK(zero.phi == 0.0);
  CHECK(std::abs(eval_gradY(1, 1, std::numbers::pi / 2, 0.0).phi) <= 1e-16);

  const double h = 1e-5;
  const auto g = eval_gradY(3, 2, 1.0, 0.3);
  const double fd = (eval_Y(3, 2, 1.0 + h, 0.3) - eval_Y(3, 2, 1.0 - h, 0.3)) / (2 * h);
  CHECK(std::abs(g.theta - fd) <= 1e-8);
  // Frozen from mpmath differentiation.
  CHECK(g.theta == doctest::Approx(-0.12468719909909482).epsilon(1e-13));
  CHECK(g.phi == doctest::Approx(-0.74206035092465926).epsilon(1e-13));

  NormalGenerator rng(31);
  double worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    const double u1 = 0.5 + 0.5 * std::erf(rng() / std::sqrt(2.0));
    const double u2 = 0.5 + 0.5 * std::erf(rng() / std::sqrt(2.0));
    const double theta = 0.05 + u1 * (std::numbers::pi - 0.1);
    const double phi = 2 * std::numbers::pi * u2;
    const int l = 1 + k % 12;
    const int m = (k * 7) % (2 * l + 1) - l;
    const auto gr = eval_gradY(l, m, theta, phi);
    const double dt = (eval_Y(l, m, theta + h, phi) - eval_Y(l, m, theta - h, phi)) / (2 * h);
    const double dp = (eval_Y(l, m, theta, phi + h) - eval_Y(l, m, theta, phi - h)) / (2 * h) / std::sin(theta);
    worst = std::max({worst, std::abs(gr.theta - dt), std::abs(gr.phi - dp)});
  }
  CHECK(worst <= 1e-7);
  CHECK_THROWS_AS(eval_gradY(2, 1, 0.0, 0.3), std::domain_error);
  CHECK_THROWS_AS(eval_gradY(2, 1, std::numbers::pi, 0.3), std::domain_error);
}

TEST_CASE("synthesis") {
  const int n = 6;
  const auto grid = GridSpec::for_degree(n);
  const auto zero = synthesize(TangentField(n), grid);
  for (double v : zero.theta_comp) CHECK(v == 0.0);

  ZSpectrum single(n);
  single(3, -2) = 1.0;
  const auto s = synthesize_z(single, grid);
  double worst = 0.0;
  for (int i = 0; i < grid.n_theta; ++i)
    for (int j = 0; j < grid.n_phi; ++j)
      worst = std::max(worst, std::abs(s[i * grid.n_phi + j] - eval_Z(3, -2, grid.theta[i], grid.phi[j])));
  CHECK(worst <= 1e-15);

  CHECK_THROWS_AS(synthesize_z(single, GridSpec(n, 2 * n + 3)), std::invalid_argument);
  CHECK_THROWS_AS(synthesize_z(single, GridSpec(n + 1, 2 * n + 2)), std::invalid_argument);
}

TEST_CASE("the two synthesis routes agree") {
  const int n = 12;
  auto s = random_spectrum(n - 1, 71), t = random_spectrum(n - 1, 72);
  s(0, 0) = t(0, 0) = 0.0;
  const auto grid = GridSpec::for_degree(n);
  const auto a = synthesize(differentiate(s, t), grid);
  const auto b = synthesize_from_potentials(s, t, grid);
  CHECK(testing::max_abs_diff(a.theta_comp, b.theta_comp) <= 1e-11);
  CHECK(testing::max_abs_diff(a.phi_comp, b.phi_comp) <= 1e-11);
}

TEST_CASE("analysis") {
  const int n = 10;
  const auto grid = GridSpec::for_degree(n);
  ZSpectrum single(n);
  single(2, 1) = 1.0;
  const auto z = analyze_z(synthesize_z(single, grid), grid, n);
  for (int m = -(n + 1); m <= n + 1; ++m)
    for (int l = z.first_degree(m); l <= n; ++l) {
      if (l == 2 && m == 1)
        CHECK(std::abs(z(l, m) - 1.0) <= 1e-13);
      else
        REQUIRE(std::abs(z(l, m)) <= 1e-13);
    }

  const auto zero = analyze_z(std::vector<double>(grid.n_theta * grid.n_phi, 0.0), grid, n);
  for (double v : zero.data()) CHECK(v == 0.0);

  ZSpectrum r(n);
  NormalGenerator rng(3);
  for (auto& v : r.data()) v = rng();
  const auto back = analyze_z(synthesize_z(r, grid), grid, n);
  CHECK(testing::max_abs_diff(back.data(), r.data()) <= 1e-12);

  CHECK_THROWS_AS(analyze_z(std::vector<double>(5, 0.0), grid, n), std::invalid_argument);
  CHECK_THROWS_AS(analyze_z(synthesize_z(r, grid), grid, n + 1), std::invalid_argument);
}

TEST_CASE("quadrature forward map equals differentiate") {
  for (int n : {2, 5, 9, 16}) {
    auto s = random_spectrum(n - 1, 200 + n), t = random_spectrum(n - 1, 300 + n);
    const auto grid = GridSpec::for_degree(n);
    const auto f = differentiate(s, t);
    const auto q = analyze_z(synthesize_from_potentials(s, t, grid), grid, n);
    CHECK(testing::max_abs_diff(q.theta.data(), f.theta.data()) <= 1e-10);
    CHECK(testing::max_abs_diff(q.phi.data(), f.phi.data()) <= 1e-10);
  }
}
