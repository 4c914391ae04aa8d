#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace hhd {

enum class Basis { Y, Z };

/// Triangular coefficient table stored order-major (m = -M..M ascending),
/// with each order's degree run contiguous. The first stored degree of an
/// order depends on the basis: |m| for Y, ||m|-1| for Z (1 at m = 0).
class CoefficientTable {
 public:
  Basis basis() const { return basis_; }
  int degree() const { return degree_; }
  int max_order() const { return max_order_; }
  std::size_t size() const { return coeff_.size(); }

  int first_degree(int m) const;
  bool contains(int l, int m) const;

  double operator()(int l, int m) const { return coeff_[index(l, m)]; }
  double& operator()(int l, int m) { return coeff_[index(l, m)]; }

  /// Degree run first_degree(m)..degree() of order m.
  std::span<double> order(int m);
  std::span<const double> order(int m) const;

  std::span<double> data() { return coeff_; }
  std::span<const double> data() const { return coeff_; }

  bool all_finite() const;

 protected:
  CoefficientTable(Basis basis, int degree, int max_order);

 private:
  std::size_t index(int l, int m) const;
  void check_order(int m) const;

  Basis basis_;
  int degree_;
  int max_order_;
  std::vector<std::size_t> offset_;  // indexed by m + max_order_, one past the end at 2*max_order_+1
  std::vector<double> coeff_;
};

/// Coefficients of sum_{l<=n_pot} sum_{|m|<=l} f_{l,m} Y_{l,m}.
class ScalarSpectrum : public CoefficientTable {
 public:
  ScalarSpectrum() : ScalarSpectrum(0) {}
  explicit ScalarSpectrum(int n_pot);
};

/// Coefficients in the Z basis: ||m|-1| <= l <= n, |m| <= n+1.
class ZSpectrum : public CoefficientTable {
 public:
  ZSpectrum() : ZSpectrum(0) {}
  explicit ZSpectrum(int n);
};

struct TangentField {
  ZSpectrum theta;
  ZSpectrum phi;

  TangentField() = default;
  explicit TangentField(int n);
  TangentField(ZSpectrum theta_component, ZSpectrum phi_component);

  int degree() const { return theta.degree(); }
};

struct HHDResult {
  ScalarSpectrum spheroidal;
  ScalarSpectrum toroidal;
  /// Combined 2-norm of the least-squares residual, indexed by |m| = 0..n-1.
  std::vector<double> residual_by_order;
  /// Z content the systems cannot represent, indexed by |m| = 0..n+1.
  std::vector<double> out_of_range_by_order;
};

ScalarSpectrum new_scalar_spectrum(int n_pot);

/// i.i.d. standard-normal coefficients, filled in storage order.
ScalarSpectrum random_spectrum(int n_pot, std::uint64_t seed);

/// ||a - b||_2 / ||b||_2, or ||a||_2 when b vanishes.
double relative_l2_error(const ScalarSpectrum& a, const ScalarSpectrum& b);

double l2_norm(std::span<const double> values);

}  // namespace hhd
