#pragma once

#include <span>
#include <vector>

#include "hhd/dense.hpp"

namespace hhd {

/// Rectangular band matrix stored by diagonals: entry (i, j) is structurally
/// zero unless -lower <= j - i <= upper.
class BandedMatrix {
 public:
  BandedMatrix() = default;
  BandedMatrix(int rows, int cols, int lower, int upper);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int lower() const { return lower_; }
  int upper() const { return upper_; }

  bool in_band(int i, int j) const;
  /// Zero outside the band.
  double operator()(int i, int j) const;
  /// Throws std::out_of_range outside the band.
  double& at(int i, int j);

  /// Smallest bandwidths that cover the actual nonzeros.
  int nonzero_lower() const;
  int nonzero_upper() const;

  std::vector<double> multiply(std::span<const double> x) const;
  std::vector<double> transpose_multiply(std::span<const double> y) const;

  dense::Matrix to_dense() const;

 private:
  int width() const { return lower_ + upper_ + 1; }

  int rows_ = 0;
  int cols_ = 0;
  int lower_ = 0;
  int upper_ = 0;
  // Column j keeps rows j-upper..j+lower at data_[j*width + (i - j + upper)].
  std::vector<double> data_;
};

}  // namespace hhd
