#pragma once

#include <cstddef>
#include <span>
#include <vector>

// Small dense linear algebra used as an independent oracle for the banded
// fast path: Jacobi SVD and eigenvalues, Householder least squares.
// Everything here is O(n^3) and meant for n in the hundreds.

namespace hhd::dense {

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  std::span<const double> data() const { return data_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

Matrix transpose(const Matrix& a);
Matrix multiply(const Matrix& a, const Matrix& b);
std::vector<double> multiply(const Matrix& a, std::span<const double> x);
Matrix add(const Matrix& a, const Matrix& b, double scale_b = 1.0);
double max_abs(const Matrix& a);
double frobenius_norm(const Matrix& a);
double inf_norm(const Matrix& a);

/// Singular values in descending order (one-sided Jacobi; rows >= cols not required).
std::vector<double> singular_values(const Matrix& a);

/// Eigenvalues of a symmetric matrix in ascending order (cyclic Jacobi).
std::vector<double> symmetric_eigenvalues(const Matrix& a);

/// Inverse of a nonsingular upper-triangular matrix by column back-substitution.
Matrix inverse_upper_triangular(const Matrix& r);

/// Minimizer of ||a x - b||_2 through Householder QR; a must have full column rank.
std::vector<double> least_squares(const Matrix& a, std::span<const double> b);

/// ||a||_2 / sigma_min(a) from singular_values.
double condition_number(const Matrix& a);

}  // namespace hhd::dense
