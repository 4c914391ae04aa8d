#include "hhd/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>

#include "hhd/conditioning.hpp"
#include "hhd/operators.hpp"
#include "hhd/pointwise.hpp"
#include "hhd/recurrences.hpp"
#include "hhd/rng.hpp"
#include "hhd/solver.hpp"

namespace hhd::verify {

namespace {

namespace rec = recurrences;
namespace pw = pointwise;

SuiteResult make(const std::string& name, double worst, double tol, std::string detail = {}) {
  SuiteResult r;
  r.name = name;
  r.worst = worst;
  r.tolerance = tol;
  r.passed = std::isfinite(worst) && worst <= tol;
  r.detail = std::move(detail);
  return r;
}

// Potentials with the constant mode removed, as the decomposition expects.
ScalarSpectrum random_potential(int n_pot, std::uint64_t seed) {
  ScalarSpectrum s = random_spectrum(n_pot, seed);
  s(0, 0) = 0.0;
  return s;
}

}  // namespace

ConversionCoefficients library_coefficients() { return {&rec::alpha, &rec::beta, &rec::gamma, &rec::delta}; }

SuiteResult recurrence_bounds_suite(Level level) {
  const int lmax = level == Level::full ? 10000 : 1000;
  const int mmax = level == Level::full ? 100 : 20;
  // Violations are measured as positive excess over each bound.
  double worst = 0.0;
  for (int m = 1; m <= mmax; ++m)
    for (int l = 1; l <= lmax; ++l) {
      const double d = rec::chol_d(l, m), e = rec::chol_e(l, m), f = rec::chol_f(l, m);
      worst = std::max({worst, d - (l + 2.0 * m) / 2.0, e - 1.0, f - (l + 1.0) / 2.0});
      if (m >= 2) worst = std::max(worst, (m - 1.5) - (d - e - f));
    }
  const double explicit_error = std::max({std::abs(rec::chol_d(1, 2) - std::sqrt(32.0 / 7.0)),
                                          std::abs(rec::chol_e(1, 2) - std::sqrt(0.5)),
                                          std::abs(rec::chol_f(1, 2) - std::sqrt(25.0 / 42.0))});
  char buf[128];
  std::snprintf(buf, sizeof buf, "l<=%d m<=%d, values at (1,2) off by %.1e", lmax, mmax, explicit_error);
  return make("recurrence-bounds", std::max(worst, explicit_error > 1e-15 ? explicit_error : 0.0), 0.0, buf);
}

SuiteResult cholesky_identity_suite(Level level) {
  const std::vector<int> sizes = level == Level::full ? std::vector<int>{4, 8, 16, 32, 64} : std::vector<int>{4, 8, 16};
  double worst = 0.0;
  for (int n : sizes)
    for (int m = 1; m <= n - 1; ++m) worst = std::max(worst, conditioning::cholesky_identity_deviation(n, m));
  return make("cholesky-identity", worst, 1e-13, "R^T R vs C + D, all m");
}

SuiteResult structure_suite(Level level) {
  const int nmax = level == Level::full ? 256 : 32;
  int failures = 0;
  double perm_error = 0.0;
  for (int n = 2; n <= nmax; ++n)
    for (int m = 1; m <= n - 1; ++m) {
      const OrderSystem sys = build_order_system(n, m);
      for (int i = 0; i < sys.A.cols(); ++i)
        if (sys.A(i, i) != 0.0 || sys.B(i, i) != m) ++failures;
      for (int j = 0; j < sys.B.cols(); ++j)
        if (sys.B(sys.B.rows() - 1, j) != 0.0) ++failures;
      if (sys.A.nonzero_lower() > 1 || sys.A.nonzero_upper() > 1) ++failures;
      if (sys.B.nonzero_lower() > 0 || sys.B.nonzero_upper() > 0) ++failures;
      if (sys.shuffled.nonzero_lower() > 2 || sys.shuffled.nonzero_upper() > 2) ++failures;
      if (n <= 16) {
        const dense::Matrix M = assemble_block_system(sys.A, sys.B);
        for (std::size_t i = 0; i < M.rows(); ++i)
          for (std::size_t j = 0; j < M.cols(); ++j)
            perm_error = std::max(perm_error, std::abs(sys.shuffled(sys.row_perm.map[i], sys.col_perm.map[j]) - M(i, j)));
      }
    }
  char buf[128];
  std::snprintf(buf, sizeof buf, "n<=%d, %d structural failures", nmax, failures);
  return make("structure", failures > 0 ? static_cast<double>(failures) : perm_error, 0.0, buf);
}

SuiteResult pointwise_identity_suite(Level level, const ConversionCoefficients& c) {
  const int lmax = level == Level::full ? 20 : 8;
  const pw::GridSpec grid(24, 5);
  const double phis[] = {0.3, 1.1, 2.5, 4.0, 5.7};
  const auto csc_y = [](int l, int m, double theta, double phi) {
    return pw::eval_Y(l, m, theta, phi) / std::sin(theta);
  };
  double worst = 0.0;
  for (double theta : grid.theta) {
    if (theta < 0.1 || theta > std::numbers::pi - 0.1) continue;
    for (double phi : phis)
      for (int l = 0; l <= lmax; ++l) {
        // Z_{l,m}, |m| <= l + 1.
        for (int m = -(l + 1); m <= l + 1; ++m) {
          const int am = std::abs(m);
          if (l < std::abs(am - 1)) continue;
          double rhs = 0.0;
          if (l >= 1 && l - 1 >= am) rhs += c.alpha(l, am) * csc_y(l - 1, m, theta, phi);
          rhs += c.beta(l, am) * csc_y(l + 1, m, theta, phi);
          if (m == 0) rhs = -rhs;
          worst = std::max(worst, std::abs(pw::eval_Z(l, m, theta, phi) - rhs));
        }
        // ∂θ Y_{l,m} and cscθ ∂φ Y_{l,m}, |m| <= l.
        for (int m = -l; m <= l; ++m) {
          const int am = std::abs(m);
          const pw::TangentValue g = pw::eval_gradY(l, m, theta, phi);
          double dtheta = c.delta(l, am) * csc_y(l + 1, m, theta, phi);
          if (l - 1 >= am) dtheta += c.gamma(l, am) * csc_y(l - 1, m, theta, phi);
          worst = std::max(worst, std::abs(g.theta - dtheta));
          worst = std::max(worst, std::abs(g.phi - (-m) * csc_y(l, -m, theta, phi)));
        }
      }
  }
  return make("pointwise-identity", worst, 1e-13, "l<=" + std::to_string(lmax) + ", interior nodes");
}

SuiteResult conditioning_suite(Level level) {
  const std::vector<int> sizes = level == Level::full ? std::vector<int>{8, 16, 32, 64} : std::vector<int>{8, 16};
  double worst = 0.0;
  int bound_failures = 0;
  for (int n : sizes)
    for (int m = 1; m <= n - 1; ++m) {
      const auto rep = conditioning::kappa_numeric(n, m);
      worst = std::max(worst, std::abs(rep.kappa_M - rep.kappa_R) / rep.kappa_R);
      if (rep.kappa_R > rep.bound) ++bound_failures;
      if (rep.sigma_max_R > rep.sigma_max_bound * (1 + 1e-12)) ++bound_failures;
      if (rep.sigma_min_bound && rep.sigma_min_R < *rep.sigma_min_bound * (1 - 1e-12)) ++bound_failures;
    }
  char buf[128];
  std::snprintf(buf, sizeof buf, "kappa(M) = kappa(R); %d bound failures", bound_failures);
  return make("conditioning", bound_failures > 0 ? std::numeric_limits<double>::infinity() : worst, 1e-10, buf);
}

SuiteResult oracle_equivalence_suite(Level level) {
  const std::vector<int> sizes = level == Level::full ? std::vector<int>{4, 8, 12, 16} : std::vector<int>{4, 8};
  double forward = 0.0;
  for (int n : sizes) {
    const ScalarSpectrum s = random_potential(n - 1, 11 + n), t = random_potential(n - 1, 97 + n);
    const TangentField exact = differentiate(s, t);
    const pw::GridSpec grid = pw::GridSpec::for_degree(n);
    const TangentField quad = pw::analyze_z(pw::synthesize_from_potentials(s, t, grid), grid, n);
    for (std::size_t i = 0; i < exact.theta.size(); ++i)
      forward = std::max({forward, std::abs(quad.theta.data()[i] - exact.theta.data()[i]),
                          std::abs(quad.phi.data()[i] - exact.phi.data()[i])});
  }
  // Banded QR against a dense Householder least-squares solve.
  double lsq = 0.0;
  const int n = 12;
  NormalGenerator rng(2024);
  for (int m = 1; m <= n - 1; ++m) {
    const auto fact = factor_order(n, m);
    const dense::Matrix M = assemble_block_system(build_A(n, m), build_B(n, m));
    std::vector<double> b1(M.rows()), b2(M.rows());
    for (auto& v : b1) v = rng();
    for (auto& v : b2) v = rng();
    const auto sol = solve_order(fact, b1, b2);
    for (const auto& [b, x] : {std::pair{&b1, &sol.first}, std::pair{&b2, &sol.second}}) {
      const auto ref = dense::least_squares(M, *b);
      double diff = 0.0, norm = 0.0;
      for (std::size_t i = 0; i < ref.size(); ++i) {
        diff += ((*x)[i] - ref[i]) * ((*x)[i] - ref[i]);
        norm += ref[i] * ref[i];
      }
      lsq = std::max(lsq, std::sqrt(diff / norm));
    }
  }
  char buf[160];
  std::snprintf(buf, sizeof buf, "quadrature forward map %.1e (tol 1e-10), dense lsq %.1e (tol 1e-11)", forward, lsq);
  // Each part scaled by its own tolerance.
  const double worst = std::max(forward / 1e-10, lsq / 1e-11);
  return make("oracle-equivalence", worst, 1.0, buf);
}

SuiteResult roundtrip_suite(Level level) {
  const std::vector<int> sizes = level == Level::full ? std::vector<int>{16, 64, 256} : std::vector<int>{16, 64};
  double worst = 0.0;
  double gauge = 0.0;
  double separability = 0.0;
  for (int n : sizes) {
    const ScalarSpectrum s = random_potential(n - 1, 3 * n), t = random_potential(n - 1, 3 * n + 1);
    const HHDResult r = decompose(differentiate(s, t));
    worst = std::max({worst, relative_l2_error(r.spheroidal, s), relative_l2_error(r.toroidal, t)});
    gauge = std::max({gauge, std::abs(r.spheroidal(0, 0)), std::abs(r.toroidal(0, 0))});
    // Pure toroidal m = 0 data must leave the spheroidal m = 0 slice empty.
    ScalarSpectrum zero(n - 1), t0(n - 1);
    std::copy(t.order(0).begin(), t.order(0).end(), t0.order(0).begin());
    const HHDResult rt = decompose(differentiate(zero, t0));
    separability = std::max(separability, l2_norm(rt.spheroidal.order(0)));
  }
  char buf[160];
  std::snprintf(buf, sizeof buf, "max rel error %.1e, |V_00| %.1e, m=0 leakage %.1e", worst, gauge, separability);
  // Each part scaled by its own tolerance (1e-12 roundtrip, 1e-13 leakage); the gauge must be exactly zero.
  const double combined =
      gauge != 0.0 ? std::numeric_limits<double>::infinity() : std::max(worst / 1e-12, separability / 1e-13);
  return make("roundtrip", combined, 1.0, buf);
}

std::vector<SuiteResult> run_verification(const VerifyOptions& options) {
  std::vector<SuiteResult> out;
  out.push_back(recurrence_bounds_suite(options.level));
  out.push_back(cholesky_identity_suite(options.level));
  out.push_back(structure_suite(options.level));
  out.push_back(pointwise_identity_suite(options.level, options.coefficients));
  out.push_back(conditioning_suite(options.level));
  out.push_back(oracle_equivalence_suite(options.level));
  out.push_back(roundtrip_suite(options.level));
  return out;
}

bool all_passed(const std::vector<SuiteResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const SuiteResult& r) { return r.passed; });
}

std::string format(const SuiteResult& r) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%s %-20s worst=%.3e tol=%.1e  ", r.passed ? "PASS" : "FAIL", r.name.c_str(), r.worst,
                r.tolerance);
  return buf + r.detail;
}

}  // namespace hhd::verify
