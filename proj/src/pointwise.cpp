#include "hhd/pointwise.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace hhd::pointwise {

namespace {

constexpr double kPi = std::numbers::pi;

void require(bool ok, const std::string& what) {
  if (!ok) throw std::domain_error(what);
}

// sqrt((2 - δ_{m,0}) / 2π)
double order_norm(int m) { return m == 0 ? std::sqrt(1.0 / (2.0 * kPi)) : std::sqrt(1.0 / kPi); }

double trig(int m, double phi) { return m >= 0 ? std::cos(m * phi) : std::sin(-m * phi); }

// d/dφ of trig(m, φ).
double trig_derivative(int m, double phi) {
  if (m > 0) return -m * std::sin(m * phi);
  if (m < 0) return -m * std::cos(-m * phi);
  return 0.0;
}

// ∂θ P̃_l^m from (x² - 1) dP/dx = l x P_l - (l + m) P_{l-1}, normalized.
double legendre_theta_derivative(int l, int m, double cos_t, double sin_t, double p_l, double p_lm1) {
  const double L = l, M = m;
  const double c = l > m ? std::sqrt((L * L - M * M) * (2 * L + 1) / (2 * L - 1)) : 0.0;
  return (L * cos_t * p_l - c * p_lm1) / sin_t;
}

void check_grid(const GridSpec& grid, int n) {
  if (!grid.resolves(n))
    throw std::invalid_argument("grid " + std::to_string(grid.n_theta) + "x" + std::to_string(grid.n_phi) +
                                " does not resolve degree " + std::to_string(n) + " (need >= " +
                                std::to_string(n + 1) + "x" + std::to_string(2 * n + 3) + ")");
}

// trig(m, φ_j) for m = -M..M, row (m + M).
std::vector<double> trig_table(const GridSpec& grid, int max_order) {
  std::vector<double> table((2 * max_order + 1) * static_cast<std::size_t>(grid.n_phi));
  for (int m = -max_order; m <= max_order; ++m)
    for (int j = 0; j < grid.n_phi; ++j) table[(m + max_order) * static_cast<std::size_t>(grid.n_phi) + j] = trig(m, grid.phi[j]);
  return table;
}

}  // namespace

GaussLegendre gauss_legendre(int count) {
  if (count < 1) throw std::invalid_argument("gauss_legendre: need at least one node");
  GaussLegendre out;
  out.nodes.resize(count);
  out.weights.resize(count);
  for (int i = 0; i < (count + 1) / 2; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (count + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= count; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (count == 1) p0 = 1.0;
      // p1 = P_count(x), p0 = P_{count-1}(x)
      dp = count * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) <= 1e-16) break;
    }
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= count; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    if (count == 1) p0 = 1.0;
    dp = count * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    out.nodes[i] = -x;
    out.nodes[count - 1 - i] = x;
    out.weights[i] = w;
    out.weights[count - 1 - i] = w;
  }
  return out;
}

void legendre_norm_run(int lmax, int m, double x, std::span<double> out) {
  require(m >= 0 && lmax >= m, "legendre_norm_run: need 0 <= m <= lmax");
  require(x >= -1.0 && x <= 1.0, "legendre_norm_run: x outside [-1, 1]");
  if (out.size() < static_cast<std::size_t>(lmax - m + 1))
    throw std::invalid_argument("legendre_norm_run: output too short");
  const double s2 = (1.0 - x) * (1.0 + x);
  double pmm = 0.5 * (2.0 * m + 1.0);
  for (int k = 1; k <= m; ++k) pmm *= s2 * (2.0 * k - 1.0) / (2.0 * k);
  pmm = std::sqrt(pmm);
  out[0] = pmm;
  if (lmax == m) return;
  out[1] = std::sqrt(2.0 * m + 3.0) * x * pmm;
  const double M = m;
  for (int l = m + 2; l <= lmax; ++l) {
    const double L = l;
    const double a = std::sqrt((4.0 * L * L - 1.0) / ((L - M) * (L + M)));
    const double b = std::sqrt((2.0 * L + 1.0) * (L - M - 1.0) * (L + M - 1.0) / ((2.0 * L - 3.0) * (L - M) * (L + M)));
    out[l - m] = a * x * out[l - m - 1] - b * out[l - m - 2];
  }
}

double legendre_norm(int l, int m, double x) {
  require(m >= 0 && l >= m, "legendre_norm: need 0 <= m <= l");
  std::vector<double> run(l - m + 1);
  legendre_norm_run(l, m, x, run);
  return run.back();
}

double eval_Y(int l, int m, double theta, double phi) {
  require(l >= 0 && std::abs(m) <= l, "eval_Y: index outside the Y basis");
  return legendre_norm(l, std::abs(m), std::cos(theta)) * order_norm(m) * trig(m, phi);
}

double eval_Z(int l, int m, double theta, double phi) {
  const int k = std::abs(std::abs(m) - 1);
  require(l >= k, "eval_Z: index outside the Z basis");
  return legendre_norm(l, k, std::cos(theta)) * order_norm(m) * trig(m, phi);
}

TangentValue eval_gradY(int l, int m, double theta, double phi) {
  require(l >= 0 && std::abs(m) <= l, "eval_gradY: index outside the Y basis");
  const double sin_t = std::sin(theta);
  require(theta > 0.0 && theta < kPi && sin_t > 1e-8, "eval_gradY: θ at a pole");
  if (l == 0) return {};
  const int am = std::abs(m);
  const double cos_t = std::cos(theta);
  std::vector<double> run(l - am + 1);
  legendre_norm_run(l, am, cos_t, run);
  const double p_l = run.back();
  const double p_lm1 = l > am ? run[l - am - 1] : 0.0;
  const double norm = order_norm(m);
  return {norm * legendre_theta_derivative(l, am, cos_t, sin_t, p_l, p_lm1) * trig(m, phi),
          norm * p_l / sin_t * trig_derivative(m, phi)};
}

GridSpec::GridSpec(int n_theta_, int n_phi_) : n_theta(n_theta_), n_phi(n_phi_) {
  if (n_theta < 1 || n_phi < 1) throw std::invalid_argument("GridSpec: need positive sizes");
  const GaussLegendre gl = gauss_legendre(n_theta);
  cos_theta = gl.nodes;
  weights = gl.weights;
  theta.resize(n_theta);
  for (int i = 0; i < n_theta; ++i) theta[i] = std::acos(cos_theta[i]);
  phi.resize(n_phi);
  for (int j = 0; j < n_phi; ++j) phi[j] = 2.0 * kPi * j / n_phi;
}

GridSpec GridSpec::for_degree(int n) { return GridSpec(n + 2, 2 * n + 4); }

FieldSamples::FieldSamples(int n_theta_, int n_phi_)
    : n_theta(n_theta_),
      n_phi(n_phi_),
      theta_comp(static_cast<std::size_t>(n_theta_) * n_phi_, 0.0),
      phi_comp(static_cast<std::size_t>(n_theta_) * n_phi_, 0.0) {}

std::vector<double> synthesize_z(const ZSpectrum& z, const GridSpec& grid) {
  const int n = z.degree();
  check_grid(grid, n);
  const int max_order = z.max_order();
  const auto table = trig_table(grid, max_order);
  std::vector<double> out(static_cast<std::size_t>(grid.n_theta) * grid.n_phi, 0.0);
  std::vector<double> run(n + 2);
  std::vector<double> ring(2 * max_order + 1);
  for (int i = 0; i < grid.n_theta; ++i) {
    for (int m = -max_order; m <= max_order; ++m) {
      const int k = std::abs(std::abs(m) - 1);
      const int first = z.first_degree(m);
      legendre_norm_run(n, k, grid.cos_theta[i], run);
      double g = 0.0;
      const auto coeffs = z.order(m);
      for (std::size_t idx = 0; idx < coeffs.size(); ++idx) g += coeffs[idx] * run[first + idx - k];
      ring[m + max_order] = g * order_norm(m);
    }
    for (int j = 0; j < grid.n_phi; ++j) {
      double v = 0.0;
      for (int m = -max_order; m <= max_order; ++m)
        v += ring[m + max_order] * table[(m + max_order) * static_cast<std::size_t>(grid.n_phi) + j];
      out[static_cast<std::size_t>(i) * grid.n_phi + j] = v;
    }
  }
  return out;
}

FieldSamples synthesize(const TangentField& field, const GridSpec& grid) {
  FieldSamples out(grid.n_theta, grid.n_phi);
  out.theta_comp = synthesize_z(field.theta, grid);
  out.phi_comp = synthesize_z(field.phi, grid);
  return out;
}

FieldSamples synthesize_from_potentials(const ScalarSpectrum& s, const ScalarSpectrum& t, const GridSpec& grid) {
  if (s.degree() != t.degree()) throw std::invalid_argument("synthesize_from_potentials: degrees differ");
  const int np = s.degree();
  check_grid(grid, np + 1);
  FieldSamples out(grid.n_theta, grid.n_phi);
  std::vector<double> run(np + 1);
  // Per order: Σ s ∂θP̃, Σ s P̃/sinθ, and the same for t.
  const int orders = 2 * np + 1;
  std::vector<double> s_dtheta(orders), s_csc(orders), t_dtheta(orders), t_csc(orders);
  for (int i = 0; i < grid.n_theta; ++i) {
    const double x = grid.cos_theta[i];
    const double sin_t = std::sin(grid.theta[i]);
    for (int m = -np; m <= np; ++m) {
      const int am = std::abs(m);
      legendre_norm_run(np, am, x, run);
      double sd = 0.0, sc = 0.0, td = 0.0, tc = 0.0;
      const auto sv = s.order(m);
      const auto tv = t.order(m);
      for (int l = am; l <= np; ++l) {
        const double p = run[l - am];
        const double pm1 = l > am ? run[l - am - 1] : 0.0;
        const double dp = legendre_theta_derivative(l, am, x, sin_t, p, pm1);
        sd += sv[l - am] * dp;
        sc += sv[l - am] * p / sin_t;
        td += tv[l - am] * dp;
        tc += tv[l - am] * p / sin_t;
      }
      const double norm = order_norm(m);
      s_dtheta[m + np] = norm * sd;
      s_csc[m + np] = norm * sc;
      t_dtheta[m + np] = norm * td;
      t_csc[m + np] = norm * tc;
    }
    for (int j = 0; j < grid.n_phi; ++j) {
      const double phi = grid.phi[j];
      double vt = 0.0, vp = 0.0;
      for (int m = -np; m <= np; ++m) {
        const double tr = trig(m, phi);
        const double dtr = trig_derivative(m, phi);
        // ∇Y = (∂θY, cscθ∂φY);  e_r × ∇Y = (-cscθ∂φY, ∂θY).
        vt += s_dtheta[m + np] * tr - t_csc[m + np] * dtr;
        vp += s_csc[m + np] * dtr + t_dtheta[m + np] * tr;
      }
      out.theta_comp[static_cast<std::size_t>(i) * grid.n_phi + j] = vt;
      out.phi_comp[static_cast<std::size_t>(i) * grid.n_phi + j] = vp;
    }
  }
  return out;
}

ZSpectrum analyze_z(std::span<const double> samples, const GridSpec& grid, int n) {
  check_grid(grid, n);
  if (samples.size() != static_cast<std::size_t>(grid.n_theta) * grid.n_phi)
    throw std::invalid_argument("analyze_z: sample count does not match the grid");
  ZSpectrum z(n);
  const int max_order = z.max_order();
  const auto table = trig_table(grid, max_order);
  const double dphi = 2.0 * kPi / grid.n_phi;
  std::vector<double> run(n + 2);
  for (int i = 0; i < grid.n_theta; ++i) {
    const double* row = samples.data() + static_cast<std::size_t>(i) * grid.n_phi;
    for (int m = -max_order; m <= max_order; ++m) {
      const double* tr = table.data() + (m + max_order) * static_cast<std::size_t>(grid.n_phi);
      double fourier = 0.0;
      for (int j = 0; j < grid.n_phi; ++j) fourier += row[j] * tr[j];
      fourier *= dphi * order_norm(m) * grid.weights[i];
      const int k = std::abs(std::abs(m) - 1);
      const int first = z.first_degree(m);
      legendre_norm_run(n, k, grid.cos_theta[i], run);
      auto coeffs = z.order(m);
      for (std::size_t idx = 0; idx < coeffs.size(); ++idx) coeffs[idx] += fourier * run[first + idx - k];
    }
  }
  return z;
}

TangentField analyze_z(const FieldSamples& samples, const GridSpec& grid, int n) {
  if (samples.n_theta != grid.n_theta || samples.n_phi != grid.n_phi)
    throw std::invalid_argument("analyze_z: samples were taken on a different grid");
  return TangentField(analyze_z(samples.theta_comp, grid, n), analyze_z(samples.phi_comp, grid, n));
}

}  // namespace hhd::pointwise
