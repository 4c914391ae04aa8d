#pragma once

#include <span>
#include <vector>

#include "hhd/banded_matrix.hpp"
#include "hhd/dense.hpp"

namespace hhd {

// Degree ranges per order |m| at truncation n:
//   Z coefficients        z_first_degree(m) .. n
//   cscθY coefficients    |m| .. n
//   potentials            potential_first_degree(m) .. n-1   (degree 0 has no gradient)
int z_first_degree(int m);
int potential_first_degree(int m);

/// Column-selection permutation P = I[:, map]; applying it sends entry k to
/// position map[k]. Stored 0-based.
struct Permutation {
  std::vector<int> map;

  int size() const { return static_cast<int>(map.size()); }
  std::vector<int> one_based() const;
  bool is_bijection() const;

  /// y[map[k]] = x[k].
  std::vector<double> apply(std::span<const double> x) const;
  /// x[k] = y[map[k]].
  std::vector<double> apply_inverse(std::span<const double> y) const;
};

/// Odd positions before even ones: (1, 3, 5, ..., 2, 4, 6, ...) one-based.
Permutation shuffle_permutation(int size);

/// ∂θ in cscθY coefficients: rows degrees |m|..n, columns the potential degrees.
BandedMatrix build_A(int n, int m);
/// cscθ∂φ up to the order flip: m on the diagonal, last row zero. Requires 1 <= m <= n-1.
BandedMatrix build_B(int n, int m);

struct OrderSystem {
  int n = 0;
  int m = 0;
  BandedMatrix A;
  BandedMatrix B;
  /// P1 [[A, B], [B, A]] P2^T, pentadiagonal.
  BandedMatrix shuffled;
  Permutation row_perm;
  Permutation col_perm;
};

OrderSystem build_order_system(int n, int m);

/// Dense [[A, B], [B, A]] for oracles and tests.
dense::Matrix assemble_block_system(const BandedMatrix& A, const BandedMatrix& B);

/// Z coefficients (degrees z_first_degree(m)..n) to cscθY coefficients
/// (degrees |m|..n). The degree n+1 term z_n beta(n,|m|) falls outside the
/// truncation and is dropped; z_to_cscy_tail returns it.
std::vector<double> z_to_cscy(std::span<const double> z, int m, int n);
double z_to_cscy_tail(std::span<const double> z, int m, int n);

/// Inverse of z_to_cscy on exactly representable data: substitutes down from
/// the top degree with z_n = 0 (no degree n+1 content).
std::vector<double> cscy_to_z(std::span<const double> w, int m, int n);

}  // namespace hhd
