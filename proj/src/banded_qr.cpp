#include "hhd/banded_qr.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hhd {

template <class Visitor>
void BandedQR::for_each_rotation_slot(Visitor&& visit) const {
  // Column j: the pivot row j absorbs rows j+1..j+lower in turn.
  for (int j = 0; j < cols_; ++j) {
    const int last = std::min(rows_ - 1, j + lower_);
    for (int i = j + 1; i <= last; ++i) visit(j, i);
  }
}

BandedQR::BandedQR(const BandedMatrix& a) : rows_(a.rows()), cols_(a.cols()), lower_(a.lower()) {
  if (rows_ < cols_) throw std::invalid_argument("BandedQR: matrix has more columns than rows");
  const int p = a.lower();
  const int q = a.upper();
  const int upper_r = p + q;
  // Row i holds columns i-p .. i+p+q.
  const int width = 2 * p + q + 1;
  std::vector<double> work(static_cast<std::size_t>(rows_) * width, 0.0);
  auto w = [&](int i, int j) -> double& { return work[static_cast<std::size_t>(i) * width + (j - i + p)]; };
  for (int j = 0; j < cols_; ++j)
    for (int i = std::max(0, j - q); i <= std::min(rows_ - 1, j + p); ++i) w(i, j) = a(i, j);

  rotations_.reserve(static_cast<std::size_t>(cols_) * p);
  for (int j = 0; j < cols_; ++j) {
    const int last = std::min(rows_ - 1, j + p);
    const int kmax = std::min(cols_ - 1, j + upper_r);
    for (int i = j + 1; i <= last; ++i) {
      const double x = w(j, j);
      const double y = w(i, j);
      GivensRotation g;
      if (y != 0.0) {
        const double h = std::sqrt(x * x + y * y);
        g.c = x / h;
        g.s = y / h;
        for (int k = j; k <= kmax; ++k) {
          const double top = w(j, k);
          const double bottom = w(i, k);
          w(j, k) = g.c * top + g.s * bottom;
          w(i, k) = -g.s * top + g.c * bottom;
        }
        w(i, j) = 0.0;
      }
      rotations_.push_back(g);
    }
  }

  upper_r_ = upper_r;
  const int stride = upper_r + 1;
  sign_.assign(cols_, 1);
  r_rows_.assign(static_cast<std::size_t>(cols_) * stride, 0.0);
  for (int j = 0; j < cols_; ++j) {
    if (w(j, j) < 0.0) sign_[j] = -1;
    const int kmax = std::min(cols_ - 1, j + upper_r);
    for (int k = j; k <= kmax; ++k) r_rows_[static_cast<std::size_t>(j) * stride + (k - j)] = sign_[j] * w(j, k);
  }
}

BandedMatrix BandedQR::r() const {
  BandedMatrix r(cols_, cols_, 0, upper_r_);
  const int stride = upper_r_ + 1;
  for (int j = 0; j < cols_; ++j)
    for (int k = j; k <= std::min(cols_ - 1, j + upper_r_); ++k)
      r.at(j, k) = r_rows_[static_cast<std::size_t>(j) * stride + (k - j)];
  return r;
}

std::vector<double> BandedQR::apply_qt(std::span<const double> b) const {
  if (static_cast<int>(b.size()) != rows_) throw std::invalid_argument("BandedQR::apply_qt: length mismatch");
  std::vector<double> y(b.begin(), b.end());
  std::size_t next = 0;
  for_each_rotation_slot([&](int j, int i) {
    const GivensRotation& g = rotations_[next++];
    const double top = y[j];
    const double bottom = y[i];
    y[j] = g.c * top + g.s * bottom;
    y[i] = -g.s * top + g.c * bottom;
  });
  for (int j = 0; j < cols_; ++j) y[j] *= sign_[j];
  return y;
}

template <std::size_t K>
std::array<LeastSquaresSolution, K> BandedQR::solve_impl(const std::array<std::span<const double>, K>& bs) const {
  std::array<std::vector<double>, K> y;
  for (std::size_t r = 0; r < K; ++r) {
    if (static_cast<int>(bs[r].size()) != rows_) throw std::invalid_argument("BandedQR::solve: length mismatch");
    y[r].assign(bs[r].begin(), bs[r].end());
  }
  std::size_t next = 0;
  for_each_rotation_slot([&](int j, int i) {
    const GivensRotation g = rotations_[next++];
    for (std::size_t r = 0; r < K; ++r) {
      const double top = y[r][j];
      const double bottom = y[r][i];
      y[r][j] = g.c * top + g.s * bottom;
      y[r][i] = -g.s * top + g.c * bottom;
    }
  });

  std::array<LeastSquaresSolution, K> out;
  for (std::size_t r = 0; r < K; ++r) {
    double tail = 0.0;
    for (int i = cols_; i < rows_; ++i) tail += y[r][i] * y[r][i];
    out[r].residual_norm = std::sqrt(tail);
    out[r].x.assign(cols_, 0.0);
  }
  const int stride = upper_r_ + 1;
  for (int j = cols_ - 1; j >= 0; --j) {
    const double* row = r_rows_.data() + static_cast<std::size_t>(j) * stride;
    const int kmax = std::min(cols_ - 1, j + upper_r_);
    if (row[0] == 0.0) throw std::domain_error("BandedQR::solve: rank-deficient factor");
    for (std::size_t r = 0; r < K; ++r) {
      double s = sign_[j] * y[r][j];
      for (int k = j + 1; k <= kmax; ++k) s -= row[k - j] * out[r].x[k];
      out[r].x[j] = s / row[0];
    }
  }
  return out;
}

LeastSquaresSolution BandedQR::solve(std::span<const double> b) const {
  return std::move(solve_impl<1>({b})[0]);
}

std::array<LeastSquaresSolution, 2> BandedQR::solve_pair(std::span<const double> b1, std::span<const double> b2) const {
  return solve_impl<2>({b1, b2});
}

bool BandedQR::operator==(const BandedQR& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_ || lower_ != other.lower_) return false;
  if (sign_ != other.sign_ || rotations_.size() != other.rotations_.size()) return false;
  for (std::size_t k = 0; k < rotations_.size(); ++k)
    if (rotations_[k].c != other.rotations_[k].c || rotations_[k].s != other.rotations_[k].s) return false;
  return upper_r_ == other.upper_r_ && r_rows_ == other.r_rows_;
}

}  // namespace hhd
