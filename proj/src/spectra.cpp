#include "hhd/spectra.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "hhd/rng.hpp"

namespace hhd {

double NormalGenerator::uniform_open() {
  // 53 random bits mapped to (0, 1).
  return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
}

double NormalGenerator::operator()() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double u1 = uniform_open();
  const double u2 = uniform_open();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = radius * std::sin(angle);
  has_spare_ = true;
  return radius * std::cos(angle);
}

CoefficientTable::CoefficientTable(Basis basis, int degree, int max_order)
    : basis_(basis), degree_(degree), max_order_(max_order) {
  offset_.resize(2 * static_cast<std::size_t>(max_order_) + 2);
  std::size_t total = 0;
  for (int m = -max_order_; m <= max_order_; ++m) {
    offset_[m + max_order_] = total;
    const int first = first_degree(m);
    if (first <= degree_) total += static_cast<std::size_t>(degree_ - first + 1);
  }
  offset_.back() = total;
  coeff_.assign(total, 0.0);
}

int CoefficientTable::first_degree(int m) const {
  const int am = std::abs(m);
  if (basis_ == Basis::Y) return am;
  return am == 0 ? 1 : am - 1;
}

bool CoefficientTable::contains(int l, int m) const {
  if (std::abs(m) > max_order_) return false;
  return l >= first_degree(m) && l <= degree_;
}

void CoefficientTable::check_order(int m) const {
  if (std::abs(m) > max_order_)
    throw std::out_of_range("order " + std::to_string(m) + " outside table with max order " +
                            std::to_string(max_order_));
}

std::size_t CoefficientTable::index(int l, int m) const {
  if (!contains(l, m))
    throw std::out_of_range("coefficient (" + std::to_string(l) + ", " + std::to_string(m) +
                            ") outside the " + (basis_ == Basis::Y ? "Y" : "Z") +
                            " index set of degree " + std::to_string(degree_));
  return offset_[m + max_order_] + static_cast<std::size_t>(l - first_degree(m));
}

std::span<double> CoefficientTable::order(int m) {
  check_order(m);
  const std::size_t begin = offset_[m + max_order_];
  const std::size_t end = offset_[m + max_order_ + 1];
  return std::span<double>(coeff_).subspan(begin, end - begin);
}

std::span<const double> CoefficientTable::order(int m) const {
  check_order(m);
  const std::size_t begin = offset_[m + max_order_];
  const std::size_t end = offset_[m + max_order_ + 1];
  return std::span<const double>(coeff_).subspan(begin, end - begin);
}

bool CoefficientTable::all_finite() const {
  for (double v : coeff_)
    if (!std::isfinite(v)) return false;
  return true;
}

namespace {

int checked_degree(int n, int minimum, const char* what) {
  if (n < minimum)
    throw std::invalid_argument(std::string(what) + " degree must be >= " + std::to_string(minimum) +
                                ", got " + std::to_string(n));
  return n;
}

}  // namespace

ScalarSpectrum::ScalarSpectrum(int n_pot)
    : CoefficientTable(Basis::Y, checked_degree(n_pot, 0, "scalar spectrum"), n_pot) {}

ZSpectrum::ZSpectrum(int n) : CoefficientTable(Basis::Z, checked_degree(n, 0, "Z spectrum"), n + 1) {}

TangentField::TangentField(int n) : theta(n), phi(n) {}

TangentField::TangentField(ZSpectrum theta_component, ZSpectrum phi_component)
    : theta(std::move(theta_component)), phi(std::move(phi_component)) {
  if (theta.degree() != phi.degree())
    throw std::invalid_argument("tangent field components have degrees " + std::to_string(theta.degree()) +
                                " and " + std::to_string(phi.degree()));
}

ScalarSpectrum new_scalar_spectrum(int n_pot) { return ScalarSpectrum(n_pot); }

ScalarSpectrum random_spectrum(int n_pot, std::uint64_t seed) {
  ScalarSpectrum out(n_pot);
  NormalGenerator normal(seed);
  for (double& v : out.data()) v = normal();
  return out;
}

double l2_norm(std::span<const double> values) {
  // Scaled accumulation so huge spectra neither overflow nor lose the small tail.
  double scale = 0.0;
  double sum = 1.0;
  for (double v : values) {
    const double a = std::abs(v);
    if (a == 0.0) continue;
    if (a > scale) {
      sum = 1.0 + sum * (scale / a) * (scale / a);
      scale = a;
    } else {
      sum += (a / scale) * (a / scale);
    }
  }
  return scale * std::sqrt(sum);
}

double relative_l2_error(const ScalarSpectrum& a, const ScalarSpectrum& b) {
  if (a.degree() != b.degree())
    throw std::invalid_argument("relative_l2_error: degrees " + std::to_string(a.degree()) + " and " +
                                std::to_string(b.degree()) + " differ");
  std::vector<double> diff(a.size());
  const auto x = a.data();
  const auto y = b.data();
  for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = x[i] - y[i];
  const double denom = l2_norm(y);
  const double num = l2_norm(diff);
  return denom == 0.0 ? num : num / denom;
}

}  // namespace hhd
