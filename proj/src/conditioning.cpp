#include "hhd/conditioning.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "hhd/operators.hpp"
#include "hhd/recurrences.hpp"

namespace hhd::conditioning {

namespace rec = recurrences;

namespace {

// 4 e^{1 + 7π²/8}
double frobenius_constant() {
  return 4.0 * std::exp(1.0 + 7.0 * std::numbers::pi * std::numbers::pi / 8.0);
}

// Entries of R with the "index below 1 gives 0" convention.
double d_or_zero(int l, int m) { return l >= 1 ? rec::chol_d(l, m) : 0.0; }
double e_or_zero(int l, int m) { return l >= 1 ? rec::chol_e(l, m) : 0.0; }
double f_or_zero(int l, int m) { return l >= 1 ? rec::chol_f(l, m) : 0.0; }

}  // namespace

BandedMatrix CholeskyR::banded() const {
  BandedMatrix r(dim, dim, 0, 2);
  for (int i = 0; i < dim; ++i) {
    r.at(i, i) = d[i];
    if (i + 1 < dim) r.at(i, i + 1) = -e[i];
    if (i + 2 < dim) r.at(i, i + 2) = -f[i];
  }
  return r;
}

dense::Matrix CholeskyR::to_dense() const { return banded().to_dense(); }

CholeskyR build_R(int dim, int m) {
  if (dim < 1 || m < 1)
    throw std::domain_error("build_R: need dim >= 1 and m >= 1, got dim=" + std::to_string(dim) +
                            " m=" + std::to_string(m));
  CholeskyR r;
  r.dim = dim;
  r.m = m;
  r.d.resize(dim);
  r.e.resize(std::max(dim - 1, 0));
  r.f.resize(std::max(dim - 2, 0));
  for (int l = 1; l <= dim; ++l) {
    r.d[l - 1] = rec::chol_d(l, m);
    if (l <= dim - 1) r.e[l - 1] = rec::chol_e(l, m);
    if (l <= dim - 2) r.f[l - 1] = rec::chol_f(l, m);
  }
  return r;
}

CDPair build_CD(int n, int m) {
  const BandedMatrix a = build_A(n, m);
  const BandedMatrix b = build_B(n, m);
  const int k = a.cols();
  CDPair cd{BandedMatrix(k, k, 2, 2), BandedMatrix(k, k, 1, 1)};
  // Products of columns i, j of two band matrices; only |i - j| <= 2 survive.
  const auto column_dot = [&](const BandedMatrix& x, int i, const BandedMatrix& y, int j) {
    double s = 0.0;
    const int lo = std::max(0, std::min(i, j) - 2);
    const int hi = std::min(a.rows() - 1, std::max(i, j) + 2);
    for (int r = lo; r <= hi; ++r) s += x(r, i) * y(r, j);
    return s;
  };
  for (int i = 0; i < k; ++i)
    for (int j = std::max(0, i - 2); j <= std::min(k - 1, i + 2); ++j) {
      cd.C.at(i, j) = column_dot(a, i, a, j) + column_dot(b, i, b, j);
      if (std::abs(i - j) <= 1) cd.D.at(i, j) = column_dot(a, i, b, j) + column_dot(b, i, a, j);
    }
  return cd;
}

double cholesky_identity_deviation(int n, int m) {
  const CDPair cd = build_CD(n, m);
  const BandedMatrix r = build_R(n - m, m).banded();
  const int k = n - m;
  double worst = 0.0;
  for (int i = 0; i < k; ++i)
    for (int j = std::max(0, i - 2); j <= std::min(k - 1, i + 2); ++j) {
      double rtr = 0.0;
      for (int p = std::max(0, std::max(i, j) - 2); p <= std::min(i, j); ++p) rtr += r(p, i) * r(p, j);
      const double target = cd.C(i, j) + cd.D(i, j);
      worst = std::max(worst, std::abs(rtr - target) / std::max(std::abs(target), 1.0));
    }
  return worst;
}

ConditionReport kappa_numeric(int n, int m) {
  if (m < 1 || m > n - 1)
    throw std::domain_error("kappa_numeric: need 1 <= m <= n-1, got n=" + std::to_string(n) + " m=" + std::to_string(m));
  if (n > kDenseScaleLimit)
    throw std::invalid_argument("kappa_numeric: dense oracle limited to n <= " + std::to_string(kDenseScaleLimit));
  ConditionReport rep;
  rep.n = n;
  rep.m = m;
  const auto sigma_r = dense::singular_values(build_R(n - m, m).to_dense());
  rep.sigma_max_R = sigma_r.front();
  rep.sigma_min_R = sigma_r.back();
  rep.kappa_R = rep.sigma_max_R / rep.sigma_min_R;
  rep.kappa_M = dense::condition_number(assemble_block_system(build_A(n, m), build_B(n, m)));
  rep.bound = kappa_bound(n, m);
  const QiBounds qi = qi_singular_bounds(n - m, m);
  rep.sigma_max_bound = qi.sigma_max_upper;
  rep.sigma_min_bound = qi.sigma_min_lower;
  return rep;
}

double kappa_bound(int n, int m) {
  if (n < 1 || m < 1) throw std::domain_error("kappa_bound: need n >= 1, m >= 1");
  if (m == 1) return (n + 2.5) * frobenius_constant() * (2.0 + std::log(static_cast<double>(n)));
  return (n + m + 1.5) / (m - 1.5);
}

QiBounds qi_singular_bounds(int dim, int m) {
  if (dim < 1 || m < 1) throw std::domain_error("qi_singular_bounds: need dim >= 1, m >= 1");
  QiBounds out;
  double upper = 0.0;
  double lower = std::numeric_limits<double>::infinity();
  for (int l = 1; l <= dim; ++l) {
    const double d = rec::chol_d(l, m);
    const double row = e_or_zero(l, m) + f_or_zero(l, m);
    const double col = e_or_zero(l - 1, m) + f_or_zero(l - 2, m);
    upper = std::max({upper, d + row, d + col});
    lower = std::min({lower, d - row, d - col});
  }
  out.sigma_max_upper = upper;
  if (m >= 2) out.sigma_min_lower = lower;
  return out;
}

double inverse_norm_frobenius_bound(int blocks) {
  if (blocks < 1) throw std::domain_error("inverse_norm_frobenius_bound: need at least one block");
  return frobenius_constant() * (2.0 + std::log(2.0 * blocks - 1.0));
}

double inverse_norm_conjecture(int dim) {
  if (dim <= 1) throw std::domain_error("inverse_norm_conjecture: need dim > 1");
  return 2.0 / std::numbers::pi * std::log(dim + 2.5);
}

double Block2::inf_norm() const {
  return std::max(std::abs(a00) + std::abs(a01), std::abs(a10) + std::abs(a11));
}

double Block2::frobenius_sq() const { return a00 * a00 + a01 * a01 + a10 * a10 + a11 * a11; }

Block2 operator*(const Block2& x, const Block2& y) {
  return {x.a00 * y.a00 + x.a01 * y.a10, x.a00 * y.a01 + x.a01 * y.a11, x.a10 * y.a00 + x.a11 * y.a10,
          x.a10 * y.a01 + x.a11 * y.a11};
}

SemiSeparableBlocks semi_separable_blocks(int blocks, int m) {
  if (blocks < 1 || m < 1) throw std::domain_error("semi_separable_blocks: need blocks >= 1, m >= 1");
  SemiSeparableBlocks out;
  out.m = m;
  for (int l = 1; l <= blocks; ++l) {
    const double d1 = d_or_zero(2 * l - 1, m), d2 = d_or_zero(2 * l, m);
    const double e1 = e_or_zero(2 * l - 1, m);
    out.a.push_back({d1, -e1, 0.0, d2});
    out.a_inv.push_back({1.0 / d1, e1 / (d1 * d2), 0.0, 1.0 / d2});
    if (l < blocks) {
      const Block2 b{-f_or_zero(2 * l - 1, m), 0.0, -e_or_zero(2 * l, m), -f_or_zero(2 * l, m)};
      out.b.push_back(b);
      const Block2 ai = out.a_inv.back();
      const Block2 ab = ai * b;
      out.c.push_back({-ab.a00, -ab.a01, -ab.a10, -ab.a11});
    }
  }
  return out;
}

double semi_separable_inverse_frobenius_sq(const SemiSeparableBlocks& blocks) {
  const int count = static_cast<int>(blocks.a.size());
  double total = 0.0;
  for (int j = 0; j < count; ++j) {
    // Walk i downward so the product c_i ... c_{j-1} a_j^{-1} grows by left multiplication.
    Block2 prod = blocks.a_inv[j];
    total += prod.frobenius_sq();
    for (int i = j - 1; i >= 0; --i) {
      prod = blocks.c[i] * prod;
      total += prod.frobenius_sq();
    }
  }
  return total;
}

double semi_separable_infinity_bound_sq(const SemiSeparableBlocks& blocks) {
  const int count = static_cast<int>(blocks.a.size());
  double total = 0.0;
  for (int j = 0; j < count; ++j) {
    double inner = 1.0;
    double prod = 1.0;
    for (int i = j - 1; i >= 0; --i) {
      const double c = blocks.c[i].inf_norm();
      prod *= c * c;
      inner += prod;
    }
    const double a = blocks.a_inv[j].inf_norm();
    total += 4.0 * a * a * inner;
  }
  return total;
}

double a_inverse_bound(int l) {
  if (l < 1) throw std::domain_error("a_inverse_bound: need l >= 1");
  return 2.0 / (l - 0.5);
}

double c_bound(int l) {
  if (l < 1) throw std::domain_error("c_bound: need l >= 1");
  const double h = l - 0.5;
  return 1.0 + 0.5 / h + 1.75 / (h * h);
}

}  // namespace hhd::conditioning
