#include "hhd/banded_matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace hhd {

BandedMatrix::BandedMatrix(int rows, int cols, int lower, int upper)
    : rows_(rows), cols_(cols), lower_(lower), upper_(upper) {
  if (rows < 0 || cols < 0 || lower < 0 || upper < 0)
    throw std::invalid_argument("BandedMatrix: negative dimension or bandwidth");
  data_.assign(static_cast<std::size_t>(cols) * width(), 0.0);
}

bool BandedMatrix::in_band(int i, int j) const {
  return i >= 0 && i < rows_ && j >= 0 && j < cols_ && j - i <= upper_ && i - j <= lower_;
}

double BandedMatrix::operator()(int i, int j) const {
  if (!in_band(i, j)) return 0.0;
  return data_[static_cast<std::size_t>(j) * width() + (i - j + upper_)];
}

double& BandedMatrix::at(int i, int j) {
  if (!in_band(i, j))
    throw std::out_of_range("BandedMatrix: (" + std::to_string(i) + ", " + std::to_string(j) + ") outside band");
  return data_[static_cast<std::size_t>(j) * width() + (i - j + upper_)];
}

int BandedMatrix::nonzero_lower() const {
  int bw = 0;
  for (int j = 0; j < cols_; ++j)
    for (int i = j + 1; i <= std::min(rows_ - 1, j + lower_); ++i)
      if ((*this)(i, j) != 0.0) bw = std::max(bw, i - j);
  return bw;
}

int BandedMatrix::nonzero_upper() const {
  int bw = 0;
  for (int j = 0; j < cols_; ++j)
    for (int i = std::max(0, j - upper_); i < j && i < rows_; ++i)
      if ((*this)(i, j) != 0.0) bw = std::max(bw, j - i);
  return bw;
}

std::vector<double> BandedMatrix::multiply(std::span<const double> x) const {
  if (static_cast<int>(x.size()) != cols_) throw std::invalid_argument("BandedMatrix::multiply: length mismatch");
  std::vector<double> y(rows_, 0.0);
  for (int j = 0; j < cols_; ++j) {
    const int i0 = std::max(0, j - upper_);
    const int i1 = std::min(rows_ - 1, j + lower_);
    for (int i = i0; i <= i1; ++i) y[i] += (*this)(i, j) * x[j];
  }
  return y;
}

std::vector<double> BandedMatrix::transpose_multiply(std::span<const double> y) const {
  if (static_cast<int>(y.size()) != rows_)
    throw std::invalid_argument("BandedMatrix::transpose_multiply: length mismatch");
  std::vector<double> x(cols_, 0.0);
  for (int j = 0; j < cols_; ++j) {
    const int i0 = std::max(0, j - upper_);
    const int i1 = std::min(rows_ - 1, j + lower_);
    for (int i = i0; i <= i1; ++i) x[j] += (*this)(i, j) * y[i];
  }
  return x;
}

dense::Matrix BandedMatrix::to_dense() const {
  dense::Matrix d(rows_, cols_);
  for (int j = 0; j < cols_; ++j) {
    const int i0 = std::max(0, j - upper_);
    const int i1 = std::min(rows_ - 1, j + lower_);
    for (int i = i0; i <= i1; ++i) d(i, j) = (*this)(i, j);
  }
  return d;
}

}  // namespace hhd
