#pragma once

#include <optional>
#include <vector>

#include "hhd/banded_matrix.hpp"
#include "hhd/dense.hpp"

namespace hhd::conditioning {

/// Explicit Cholesky factor of C + D = M^T M restricted to one diagonal
/// block: upper triangular with diagonals (d, -e, -f). For truncation n at
/// order m the dimension is n - m.
struct CholeskyR {
  int dim = 0;
  int m = 0;
  std::vector<double> d;  // dim
  std::vector<double> e;  // dim - 1
  std::vector<double> f;  // dim - 2

  BandedMatrix banded() const;
  dense::Matrix to_dense() const;
};

CholeskyR build_R(int dim, int m);

struct CDPair {
  BandedMatrix C;  // A^T A + B^T B
  BandedMatrix D;  // A^T B + B^T A
};

CDPair build_CD(int n, int m);

/// Largest entrywise deviation |R^T R - (C + D)| relative to max(|C + D|_ij, 1)
/// over the pentadiagonal band (entries outside it vanish in both).
double cholesky_identity_deviation(int n, int m);

struct ConditionReport {
  int n = 0;
  int m = 0;
  double kappa_R = 0.0;
  double kappa_M = 0.0;
  double bound = 0.0;  // kappa_bound(n, m)
  double sigma_max_R = 0.0;
  double sigma_min_R = 0.0;
  double sigma_max_bound = 0.0;
  std::optional<double> sigma_min_bound;
};

constexpr int kDenseScaleLimit = 512;

/// Dense SVD of R (dimension n - m) and of the assembled M. Requires
/// 1 <= m <= n - 1 and n <= kDenseScaleLimit.
ConditionReport kappa_numeric(int n, int m);

/// Upper bound on κ2(R) for an R of dimension n:
/// (n + 5/2) 4 e^{1 + 7π²/8} (2 + log n) at m = 1, (n + m + 3/2)/(m - 3/2) otherwise.
double kappa_bound(int n, int m);

struct QiBounds {
  double sigma_max_upper = 0.0;
  std::optional<double> sigma_min_lower;  // only for m >= 2
};

/// Row/column-sum bounds on the extreme singular values of R (dimension dim).
/// Terms with index below 1 count as 0.
QiBounds qi_singular_bounds(int dim, int m);

/// 4 e^{1 + 7π²/8} (2 + log(2 blocks - 1)) bounds ||R^{-1}||_2 for m = 1
/// and dimension 2 * blocks.
double inverse_norm_frobenius_bound(int blocks);

/// (2/π) log(dim + 5/2), the empirical estimate of ||R^{-1}||_2 at m = 1.
double inverse_norm_conjecture(int dim);

// 2x2 block machinery for R = diag(a_l) (I - superdiag(c_l)) at dimension 2 * blocks.
struct Block2 {
  double a00 = 0.0, a01 = 0.0, a10 = 0.0, a11 = 0.0;

  double inf_norm() const;
  double frobenius_sq() const;
};

Block2 operator*(const Block2& x, const Block2& y);

struct SemiSeparableBlocks {
  int m = 1;
  std::vector<Block2> a;      // diagonal blocks, l = 1..blocks
  std::vector<Block2> a_inv;  // their inverses
  std::vector<Block2> b;      // superdiagonal blocks, l = 1..blocks-1
  std::vector<Block2> c;      // c_l = -a_l^{-1} b_l
};

SemiSeparableBlocks semi_separable_blocks(int blocks, int m = 1);

/// Exact ||R^{-1}||_F^2 = sum_j sum_{i<=j} ||c_i ... c_{j-1} a_j^{-1}||_F^2.
double semi_separable_inverse_frobenius_sq(const SemiSeparableBlocks& blocks);

/// 4 sum_j ||a_j^{-1}||_inf^2 sum_{i<=j} prod_{l=i}^{j-1} ||c_l||_inf^2, the
/// intermediate upper bound on ||R^{-1}||_F^2.
double semi_separable_infinity_bound_sq(const SemiSeparableBlocks& blocks);

/// Closed-form per-block bounds: ||a_l^{-1}||_inf <= 2/(l - 1/2) and
/// ||c_l||_inf <= 1 + (1/2)/(l - 1/2) + (7/4)/(l - 1/2)^2.
double a_inverse_bound(int l);
double c_bound(int l);

}  // namespace hhd::conditioning
