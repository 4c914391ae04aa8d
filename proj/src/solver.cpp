#include "hhd/solver.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <stdexcept>
#include <string>
#include <thread>

namespace hhd {

namespace {

std::atomic<std::uint64_t> g_factorizations{0};

// Orders are dealt round-robin so that cheap (large m) and expensive (small m)
// systems spread across workers.
template <class F>
void parallel_orders(int first, int last, int threads, F&& body) {
  const int count = last - first + 1;
  if (count <= 0) return;
  if (threads <= 1 || count == 1) {
    for (int m = first; m <= last; ++m) body(m);
    return;
  }
  const int workers = std::min(threads, count);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  std::vector<std::exception_ptr> errors(workers);
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      try {
        for (int m = first + w; m <= last; m += workers) body(m);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

std::vector<double> stack(std::span<const double> top, std::span<const double> bottom, double bottom_sign = 1.0) {
  std::vector<double> out;
  out.reserve(top.size() + bottom.size());
  out.insert(out.end(), top.begin(), top.end());
  for (double v : bottom) out.push_back(bottom_sign * v);
  return out;
}

double sum_squares(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return s;
}

}  // namespace

std::uint64_t factorization_count() { return g_factorizations.load(); }

BandedQRFactorization factor_order(int n, int m) {
  if (m < 1 || m > n - 1)
    throw std::domain_error("factor_order: need 1 <= m <= n-1, got n=" + std::to_string(n) + " m=" + std::to_string(m));
  OrderSystem sys = build_order_system(n, m);
  BandedQRFactorization f;
  f.n = n;
  f.m = m;
  f.qr = BandedQR(sys.shuffled);
  f.row_perm = std::move(sys.row_perm);
  f.col_perm = std::move(sys.col_perm);
  ++g_factorizations;
  return f;
}

BandedQRFactorization factor_order_zero(int n) {
  if (n < 2) throw std::domain_error("factor_order_zero: need n >= 2");
  BandedQRFactorization f;
  f.n = n;
  f.m = 0;
  f.qr = BandedQR(build_A(n, 0));
  ++g_factorizations;
  return f;
}

OrderSolution solve_order(const BandedQRFactorization& fact, std::span<const double> rhs_first,
                          std::span<const double> rhs_second) {
  if (fact.m < 1) throw std::invalid_argument("solve_order: use decompose_order_zero for m = 0");
  const auto rows = static_cast<std::size_t>(fact.rows());
  if (rhs_first.size() != rows || rhs_second.size() != rows)
    throw std::invalid_argument("solve_order: right-hand sides must have length " + std::to_string(rows));
  const auto b1 = fact.row_perm.apply(rhs_first);
  const auto b2 = fact.row_perm.apply(rhs_second);
  const auto [first, second] = fact.qr.solve_pair(b1, b2);
  OrderSolution out;
  out.first = fact.col_perm.apply_inverse(first.x);
  out.second = fact.col_perm.apply_inverse(second.x);
  out.residual_norm = std::hypot(first.residual_norm, second.residual_norm);
  return out;
}

FactorCache::FactorCache(int n) : n_(n), entries_(n > 0 ? n : 0), ready_(n > 0 ? n : 0, 0) {
  if (n < 2) throw std::invalid_argument("FactorCache: need n >= 2");
}

void FactorCache::build(int m) {
  entries_[m] = m == 0 ? factor_order_zero(n_) : factor_order(n_, m);
  ready_[m] = 1;
  ++built_;
}

const BandedQRFactorization& FactorCache::get(int m) {
  if (m < 0 || m >= n_) throw std::out_of_range("FactorCache::get: order " + std::to_string(m) + " out of range");
  if (!ready_[m]) build(m);
  return entries_[m];
}

void FactorCache::prepare(int threads) {
  parallel_orders(0, n_ - 1, threads, [&](int m) {
    if (!ready_[m]) build(m);
  });
}

bool FactorCache::complete() const {
  for (char r : ready_)
    if (!r) return false;
  return true;
}

const BandedQRFactorization& FactorCache::entry(int m) const {
  if (m < 0 || m >= n_ || !ready_[m]) throw std::logic_error("FactorCache::entry: order not prepared");
  return entries_[m];
}

OrderZeroSolution decompose_order_zero(const BandedQRFactorization& fact, std::span<const double> theta_cscy,
                                       std::span<const double> phi_cscy) {
  if (fact.m != 0) throw std::invalid_argument("decompose_order_zero: factorization is not for m = 0");
  const auto rows = static_cast<std::size_t>(fact.rows());
  if (theta_cscy.size() != rows || phi_cscy.size() != rows)
    throw std::invalid_argument("decompose_order_zero: slices must have length n+1 = " + std::to_string(rows));
  const auto [s, t] = fact.qr.solve_pair(theta_cscy, phi_cscy);
  OrderZeroSolution out;
  out.spheroidal.assign(1, 0.0);
  out.spheroidal.insert(out.spheroidal.end(), s.x.begin(), s.x.end());
  out.toroidal.assign(1, 0.0);
  out.toroidal.insert(out.toroidal.end(), t.x.begin(), t.x.end());
  out.residual_norm = std::hypot(s.residual_norm, t.residual_norm);
  return out;
}

OrderZeroSolution decompose_order_zero(std::span<const double> theta_cscy, std::span<const double> phi_cscy, int n) {
  return decompose_order_zero(factor_order_zero(n), theta_cscy, phi_cscy);
}

HHDResult decompose(const TangentField& field, const DecomposeOptions& options) {
  const int n = field.degree();
  if (n < 2) throw std::invalid_argument("decompose: need truncation degree n >= 2");
  if (field.phi.degree() != n) throw std::invalid_argument("decompose: component degrees differ");
  FactorCache* cache = options.cache;
  if (cache) {
    if (cache->degree() != n)
      throw std::invalid_argument("decompose: cache built for n=" + std::to_string(cache->degree()) +
                                  ", field has n=" + std::to_string(n));
    cache->prepare(options.threads);
  }

  HHDResult result{ScalarSpectrum(n - 1), ScalarSpectrum(n - 1), std::vector<double>(n, 0.0),
                   std::vector<double>(n + 2, 0.0)};

  const auto top_content = [&](int m) {
    double s = 0.0;
    for (int sign : {1, -1}) {
      if (m == 0 && sign < 0) break;
      for (const ZSpectrum* c : {&field.theta, &field.phi}) {
        const double z = (*c)(n, sign * m);
        s += z * z;
      }
    }
    return std::sqrt(s);
  };

  parallel_orders(0, n - 1, options.threads, [&](int m) {
    BandedQRFactorization local;
    const BandedQRFactorization* fact = nullptr;
    if (cache) {
      fact = &cache->entry(m);
    } else {
      local = m == 0 ? factor_order_zero(n) : factor_order(n, m);
      fact = &local;
    }

    if (m == 0) {
      const auto theta = z_to_cscy(field.theta.order(0), 0, n);
      const auto phi = z_to_cscy(field.phi.order(0), 0, n);
      auto sol = decompose_order_zero(*fact, theta, phi);
      sol.spheroidal[0] = 0.0;
      sol.toroidal[0] = 0.0;
      std::copy(sol.spheroidal.begin(), sol.spheroidal.end(), result.spheroidal.order(0).begin());
      std::copy(sol.toroidal.begin(), sol.toroidal.end(), result.toroidal.order(0).begin());
      result.residual_by_order[0] = sol.residual_norm;
      result.out_of_range_by_order[0] = top_content(0);
      return;
    }

    const auto theta_pos = z_to_cscy(field.theta.order(m), m, n);
    const auto theta_neg = z_to_cscy(field.theta.order(-m), m, n);
    const auto phi_pos = z_to_cscy(field.phi.order(m), m, n);
    const auto phi_neg = z_to_cscy(field.phi.order(-m), m, n);
    // M (s_m; -t_{-m}) = (θ_m; -φ_{-m}),  M (s_{-m}; t_m) = (θ_{-m}; φ_m).
    const auto rhs_first = stack(theta_pos, phi_neg, -1.0);
    const auto rhs_second = stack(theta_neg, phi_pos);
    const auto sol = solve_order(*fact, rhs_first, rhs_second);

    const std::size_t k = static_cast<std::size_t>(n - m);
    auto s_pos = result.spheroidal.order(m);
    auto s_neg = result.spheroidal.order(-m);
    auto t_pos = result.toroidal.order(m);
    auto t_neg = result.toroidal.order(-m);
    for (std::size_t i = 0; i < k; ++i) {
      s_pos[i] = sol.first[i];
      t_neg[i] = -sol.first[k + i];
      s_neg[i] = sol.second[i];
      t_pos[i] = sol.second[k + i];
    }
    result.residual_by_order[m] = sol.residual_norm;
    result.out_of_range_by_order[m] = top_content(m);
  });

  for (int m = n; m <= n + 1; ++m) {
    double s = 0.0;
    for (int sign : {1, -1})
      for (const ZSpectrum* c : {&field.theta, &field.phi}) s += sum_squares(c->order(sign * m));
    result.out_of_range_by_order[m] = std::sqrt(s);
  }
  return result;
}

TangentField differentiate(const ScalarSpectrum& s, const ScalarSpectrum& t) {
  if (s.degree() != t.degree())
    throw std::invalid_argument("differentiate: potential degrees " + std::to_string(s.degree()) + " and " +
                                std::to_string(t.degree()) + " differ");
  const int n = s.degree() + 1;
  if (n < 2) throw std::invalid_argument("differentiate: potentials need degree >= 1");
  TangentField field(n);

  {
    const BandedMatrix a = build_A(n, 0);
    const auto s0 = s.order(0).subspan(1);
    const auto t0 = t.order(0).subspan(1);
    const auto theta = cscy_to_z(a.multiply(s0), 0, n);
    const auto phi = cscy_to_z(a.multiply(t0), 0, n);
    std::copy(theta.begin(), theta.end(), field.theta.order(0).begin());
    std::copy(phi.begin(), phi.end(), field.phi.order(0).begin());
  }

  for (int m = 1; m <= n - 1; ++m) {
    const BandedMatrix a = build_A(n, m);
    const BandedMatrix b = build_B(n, m);
    const auto as_pos = a.multiply(s.order(m));
    const auto as_neg = a.multiply(s.order(-m));
    const auto at_pos = a.multiply(t.order(m));
    const auto at_neg = a.multiply(t.order(-m));
    const auto bs_pos = b.multiply(s.order(m));
    const auto bs_neg = b.multiply(s.order(-m));
    const auto bt_pos = b.multiply(t.order(m));
    const auto bt_neg = b.multiply(t.order(-m));
    const std::size_t rows = as_pos.size();
    std::vector<double> theta_pos(rows), theta_neg(rows), phi_pos(rows), phi_neg(rows);
    for (std::size_t i = 0; i < rows; ++i) {
      theta_pos[i] = as_pos[i] - bt_neg[i];
      theta_neg[i] = as_neg[i] + bt_pos[i];
      phi_pos[i] = bs_neg[i] + at_pos[i];
      phi_neg[i] = -bs_pos[i] + at_neg[i];
    }
    const auto write = [&](ZSpectrum& target, int order, const std::vector<double>& w) {
      const auto z = cscy_to_z(w, order, n);
      std::copy(z.begin(), z.end(), target.order(order).begin());
    };
    write(field.theta, m, theta_pos);
    write(field.theta, -m, theta_neg);
    write(field.phi, m, phi_pos);
    write(field.phi, -m, phi_neg);
  }
  return field;
}

int default_thread_count() {
  if (const char* env = std::getenv("HHD_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) return static_cast<int>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace hhd
