#pragma once

#include <array>
#include <span>
#include <vector>

#include "hhd/banded_matrix.hpp"

namespace hhd {

struct GivensRotation {
  double c = 1.0;
  double s = 0.0;
};

struct LeastSquaresSolution {
  std::vector<double> x;
  double residual_norm = 0.0;
};

/// QR factorization of a tall band matrix (rows >= cols, bandwidths p, q) by
/// plane rotations confined to the band. R has upper bandwidth p + q and a
/// nonnegative diagonal. Rotations are recorded in application order; the row
/// pair of each follows from the loop structure, so only (c, s) is stored.
class BandedQR {
 public:
  BandedQR() = default;
  explicit BandedQR(const BandedMatrix& a);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int rotation_count() const { return static_cast<int>(rotations_.size()); }
  std::span<const GivensRotation> rotations() const { return rotations_; }

  /// cols x cols upper-triangular factor (built on request).
  BandedMatrix r() const;

  /// Q^T b, including the row signs that make diag(R) nonnegative.
  std::vector<double> apply_qt(std::span<const double> b) const;

  LeastSquaresSolution solve(std::span<const double> b) const;
  /// Two right-hand sides in one sweep over the stored factor.
  std::array<LeastSquaresSolution, 2> solve_pair(std::span<const double> b1, std::span<const double> b2) const;

  bool operator==(const BandedQR&) const;

 private:
  template <class Visitor>
  void for_each_rotation_slot(Visitor&& visit) const;
  template <std::size_t K>
  std::array<LeastSquaresSolution, K> solve_impl(const std::array<std::span<const double>, K>& bs) const;

  int rows_ = 0;
  int cols_ = 0;
  int lower_ = 0;
  std::vector<GivensRotation> rotations_;
  int upper_r_ = 0;
  std::vector<signed char> sign_;
  // Row j of R holds columns j..j+upper_r_ at r_rows_[j * (upper_r_ + 1) + (k - j)].
  std::vector<double> r_rows_;
};

}  // namespace hhd
