#include "hhd/operators.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

#include "hhd/recurrences.hpp"

namespace hhd {

namespace rec = recurrences;

namespace {

void require(bool ok, const char* where, int n, int m) {
  if (!ok)
    throw std::domain_error(std::string(where) + ": invalid (n=" + std::to_string(n) + ", m=" + std::to_string(m) + ")");
}

// Z_{l,0} carries P̃^1 while Y_{l,0} carries P̃^0, which flips the sign of the
// conversion at m = 0 relative to |m| >= 1.
double conversion_sign(int m) { return m == 0 ? -1.0 : 1.0; }

}  // namespace

int z_first_degree(int m) {
  const int am = std::abs(m);
  return am == 0 ? 1 : am - 1;
}

int potential_first_degree(int m) {
  const int am = std::abs(m);
  return am == 0 ? 1 : am;
}

std::vector<int> Permutation::one_based() const {
  std::vector<int> out(map.begin(), map.end());
  for (int& v : out) ++v;
  return out;
}

bool Permutation::is_bijection() const {
  std::vector<char> seen(map.size(), 0);
  for (int v : map) {
    if (v < 0 || v >= size() || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

std::vector<double> Permutation::apply(std::span<const double> x) const {
  if (static_cast<int>(x.size()) != size()) throw std::invalid_argument("Permutation::apply: length mismatch");
  std::vector<double> y(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) y[map[k]] = x[k];
  return y;
}

std::vector<double> Permutation::apply_inverse(std::span<const double> y) const {
  if (static_cast<int>(y.size()) != size())
    throw std::invalid_argument("Permutation::apply_inverse: length mismatch");
  std::vector<double> x(y.size());
  for (std::size_t k = 0; k < y.size(); ++k) x[k] = y[map[k]];
  return x;
}

Permutation shuffle_permutation(int size) {
  if (size < 0 || size % 2 != 0)
    throw std::invalid_argument("shuffle_permutation: size must be even and nonnegative, got " + std::to_string(size));
  const int half = size / 2;
  Permutation p;
  p.map.resize(size);
  for (int k = 0; k < size; ++k) p.map[k] = k < half ? 2 * k : 2 * (k - half) + 1;
  return p;
}

BandedMatrix build_A(int n, int m) {
  require(m >= 0 && (m == 0 ? n >= 2 : m <= n - 1), "build_A", n, m);
  const int c0 = potential_first_degree(m);
  const int rows = n + 1 - m;
  const int cols = n - c0;
  // Column degree l sits at index l - c0, row degree k at index k - m.
  const int lower = 1 + c0 - m;
  const int upper = 1 - (c0 - m);
  BandedMatrix a(rows, cols, lower, upper);
  for (int l = c0; l <= n - 1; ++l) {
    const int j = l - c0;
    if (l - 1 >= m) a.at(l - 1 - m, j) = rec::gamma(l, m);
    a.at(l + 1 - m, j) = rec::delta(l, m);
  }
  return a;
}

BandedMatrix build_B(int n, int m) {
  require(m >= 1 && m <= n - 1, "build_B", n, m);
  BandedMatrix b(n + 1 - m, n - m, 0, 0);
  for (int i = 0; i < n - m; ++i) b.at(i, i) = m;
  return b;
}

OrderSystem build_order_system(int n, int m) {
  require(m >= 1 && m <= n - 1, "build_order_system", n, m);
  OrderSystem sys;
  sys.n = n;
  sys.m = m;
  sys.A = build_A(n, m);
  sys.B = build_B(n, m);
  const int rows = sys.A.rows();
  const int cols = sys.A.cols();
  sys.row_perm = shuffle_permutation(2 * rows);
  sys.col_perm = shuffle_permutation(2 * cols);
  sys.shuffled = BandedMatrix(2 * rows, 2 * cols, 2, 2);

  const auto& pr = sys.row_perm.map;
  const auto& pc = sys.col_perm.map;
  for (int j = 0; j < cols; ++j) {
    for (int i = std::max(0, j - 1); i <= std::min(rows - 1, j + 1); ++i) {
      const double a = sys.A(i, j);
      if (a == 0.0) continue;
      sys.shuffled.at(pr[i], pc[j]) = a;
      sys.shuffled.at(pr[rows + i], pc[cols + j]) = a;
    }
    const double b = sys.B(j, j);
    sys.shuffled.at(pr[j], pc[cols + j]) = b;
    sys.shuffled.at(pr[rows + j], pc[j]) = b;
  }
  return sys;
}

dense::Matrix assemble_block_system(const BandedMatrix& A, const BandedMatrix& B) {
  if (A.rows() != B.rows() || A.cols() != B.cols())
    throw std::invalid_argument("assemble_block_system: A and B shapes differ");
  const int r = A.rows(), c = A.cols();
  dense::Matrix M(2 * r, 2 * c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) {
      M(i, j) = A(i, j);
      M(r + i, c + j) = A(i, j);
      M(i, c + j) = B(i, j);
      M(r + i, j) = B(i, j);
    }
  return M;
}

std::vector<double> z_to_cscy(std::span<const double> z, int m, int n) {
  const int am = std::abs(m);
  require(am <= n && n >= 1, "z_to_cscy", n, m);
  const int zf = z_first_degree(m);
  if (static_cast<int>(z.size()) != n - zf + 1)
    throw std::invalid_argument("z_to_cscy: expected " + std::to_string(n - zf + 1) + " coefficients, got " +
                                std::to_string(z.size()));
  const double s = conversion_sign(am);
  std::vector<double> w(n - am + 1, 0.0);
  for (int l = am; l <= n; ++l) {
    double v = 0.0;
    if (l + 1 <= n) v += z[l + 1 - zf] * rec::alpha(l + 1, am);
    if (l - 1 >= zf) v += z[l - 1 - zf] * rec::beta(l - 1, am);
    w[l - am] = s * v;
  }
  return w;
}

double z_to_cscy_tail(std::span<const double> z, int m, int n) {
  const int am = std::abs(m);
  require(am <= n && n >= 1, "z_to_cscy_tail", n, m);
  const int zf = z_first_degree(m);
  if (static_cast<int>(z.size()) != n - zf + 1) throw std::invalid_argument("z_to_cscy_tail: length mismatch");
  return conversion_sign(am) * z[n - zf] * rec::beta(n, am);
}

std::vector<double> cscy_to_z(std::span<const double> w, int m, int n) {
  const int am = std::abs(m);
  require(am <= n && n >= 1, "cscy_to_z", n, m);
  if (static_cast<int>(w.size()) != n - am + 1)
    throw std::invalid_argument("cscy_to_z: expected " + std::to_string(n - am + 1) + " coefficients, got " +
                                std::to_string(w.size()));
  const int zf = z_first_degree(m);
  const double s = conversion_sign(am);
  std::vector<double> z(n - zf + 1, 0.0);
  // Equation for cscθY degree l+1 determines z_l once z_{l+2} is known.
  for (int l = n - 1; l >= zf; --l) {
    double v = s * w[l + 1 - am];
    if (l + 2 <= n) v -= rec::alpha(l + 2, am) * z[l + 2 - zf];
    const double pivot = rec::beta(l, am);
    if (pivot == 0.0) throw std::domain_error("cscy_to_z: zero pivot");
    z[l - zf] = v / pivot;
  }
  return z;
}

}  // namespace hhd
