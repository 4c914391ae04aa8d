#pragma once

#include <span>
#include <vector>

#include "hhd/spectra.hpp"

// Slow pointwise evaluation and quadrature used as ground truth for the
// spectral identities. O(n^3); not a transform library.
//
// Convention: P̃_l^m(cos θ) = sqrt((l + 1/2)(l - m)!/(l + m)!) sin^m θ d^m/dx^m P_l,
// i.e. the (-1)^m prefactor cancels the Condon-Shortley phase.

namespace hhd::pointwise {

struct GaussLegendre {
  std::vector<double> nodes;    // ascending in (-1, 1)
  std::vector<double> weights;  // sum to 2
};

/// Exact for polynomials of degree <= 2 count - 1.
GaussLegendre gauss_legendre(int count);

/// L2([-1, 1])-normalized associated Legendre function, 0 <= m <= l.
double legendre_norm(int l, int m, double x);

/// P̃_l^m(x) for l = m..lmax written to out[l - m] (out.size() >= lmax - m + 1).
void legendre_norm_run(int lmax, int m, double x, std::span<double> out);

double eval_Y(int l, int m, double theta, double phi);
double eval_Z(int l, int m, double theta, double phi);

struct TangentValue {
  double theta = 0.0;
  double phi = 0.0;
};

/// Surface gradient (∂θ Y, cscθ ∂φ Y) for θ strictly inside (0, π).
TangentValue eval_gradY(int l, int m, double theta, double phi);

struct GridSpec {
  int n_theta = 0;
  int n_phi = 0;
  std::vector<double> theta;      // arccos of the Gauss nodes
  std::vector<double> cos_theta;  // Gauss nodes
  std::vector<double> weights;    // Gauss weights
  std::vector<double> phi;        // 2πk / n_phi

  GridSpec() = default;
  GridSpec(int n_theta, int n_phi);

  /// Smallest comfortable grid for Z truncation n: n+2 rings, 2n+4 meridians.
  static GridSpec for_degree(int n);
  /// Resolves Z expansions up to degree n (and orders up to n+1) exactly.
  bool resolves(int n) const { return n_theta >= n + 1 && n_phi >= 2 * n + 3; }
};

struct FieldSamples {
  int n_theta = 0;
  int n_phi = 0;
  std::vector<double> theta_comp;  // [i * n_phi + j]
  std::vector<double> phi_comp;

  FieldSamples() = default;
  FieldSamples(int n_theta, int n_phi);
};

/// Pointwise sums of a scalar Z expansion on the grid, row-major.
std::vector<double> synthesize_z(const ZSpectrum& z, const GridSpec& grid);

FieldSamples synthesize(const TangentField& field, const GridSpec& grid);

/// ∇s + e_r × ∇t evaluated term by term from the potentials.
FieldSamples synthesize_from_potentials(const ScalarSpectrum& s, const ScalarSpectrum& t, const GridSpec& grid);

/// Gauss x trapezoid inner products against Z_{l,m}.
ZSpectrum analyze_z(std::span<const double> samples, const GridSpec& grid, int n);
TangentField analyze_z(const FieldSamples& samples, const GridSpec& grid, int n);

}  // namespace hhd::pointwise
