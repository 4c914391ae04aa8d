#pragma once

#include <atomic>
#include <cstdint>
#include <span>
#include <vector>

#include "hhd/banded_qr.hpp"
#include "hhd/operators.hpp"
#include "hhd/spectra.hpp"

namespace hhd {

/// Banded QR of one order's least-squares system. For m >= 1 this factors the
/// shuffled [[A, B], [B, A]]; for m = 0 it factors A alone.
struct BandedQRFactorization {
  int n = 0;
  int m = 0;
  BandedQR qr;
  Permutation row_perm;  // empty for m = 0
  Permutation col_perm;

  int rows() const { return qr.rows(); }
  int cols() const { return qr.cols(); }
};

BandedQRFactorization factor_order(int n, int m);
BandedQRFactorization factor_order_zero(int n);

/// Number of factorizations performed by this process so far.
std::uint64_t factorization_count();

struct OrderSolution {
  std::vector<double> first;
  std::vector<double> second;
  double residual_norm = 0.0;  // sqrt(r1^2 + r2^2)
};

/// Least-squares solve of two right-hand sides given in natural (unshuffled)
/// stacking, each of length 2(n+1-m); solutions come back stacked the same
/// way, (block 1; block 2), each block of length n-m.
OrderSolution solve_order(const BandedQRFactorization& fact, std::span<const double> rhs_first,
                          std::span<const double> rhs_second);

/// Factorizations for orders 0..n-1 of one truncation. A single writer fills
/// it (get or prepare); once complete it is read-only and may be shared.
class FactorCache {
 public:
  explicit FactorCache(int n);

  int degree() const { return n_; }
  const BandedQRFactorization& get(int m);
  void prepare(int threads = 1);
  bool complete() const;
  /// Requires complete(); never builds.
  const BandedQRFactorization& entry(int m) const;
  std::uint64_t factorizations_performed() const { return built_.load(); }

 private:
  void build(int m);

  int n_;
  std::vector<BandedQRFactorization> entries_;
  std::vector<char> ready_;
  std::atomic<std::uint64_t> built_{0};
};

struct OrderZeroSolution {
  std::vector<double> spheroidal;  // degrees 0..n-1, degree 0 is zero
  std::vector<double> toroidal;
  double residual_norm = 0.0;
};

/// m = 0: the gradient and curl parts decouple into A s = θ and A t = φ.
/// Slices are cscθY coefficients over degrees 0..n.
OrderZeroSolution decompose_order_zero(std::span<const double> theta_cscy, std::span<const double> phi_cscy, int n);
OrderZeroSolution decompose_order_zero(const BandedQRFactorization& fact, std::span<const double> theta_cscy,
                                       std::span<const double> phi_cscy);

struct DecomposeOptions {
  FactorCache* cache = nullptr;
  int threads = 1;
};

/// Spheroidal/toroidal potentials of a tangent field given in the Z basis.
HHDResult decompose(const TangentField& field, const DecomposeOptions& options = {});

/// Forward map: Z-basis coefficients of ∇s + e_r × ∇t. The (0,0) entries of
/// s and t are ignored.
TangentField differentiate(const ScalarSpectrum& s, const ScalarSpectrum& t);

/// Thread count from HHD_THREADS, else hardware concurrency (at least 1).
int default_thread_count();

}  // namespace hhd
