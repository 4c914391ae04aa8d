#include "hhd/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numeric>

#include <CLI11.hpp>

#include "hhd/conditioning.hpp"
#include "hhd/solver.hpp"
#include "hhd/spectra_io.hpp"
#include "hhd/verify.hpp"

namespace hhd::cli {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// splitmix64 step, to derive independent per-iteration seeds.
std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string num(const std::optional<double>& v) { return v ? num(*v) : std::string(); }

struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void write_roundtrip_csv(std::ostream& os, const std::vector<RoundtripRow>& rows) {
  os << kRoundtripHeader << '\n';
  for (const auto& r : rows)
    os << r.n << ',' << r.iter << ',' << num(r.rel_error) << ',' << num(r.precompute_seconds) << ','
       << num(r.execute_seconds) << '\n';
  const RoundtripRow mean = mean_row(rows);
  os << mean.n << ",mean," << num(mean.rel_error) << ',' << num(mean.precompute_seconds) << ','
     << num(mean.execute_seconds) << '\n';
}

// Writes to <prefix><suffix> when a prefix is given, else to out.
template <class F>
void emit(const std::string& prefix, const std::string& suffix, std::ostream& out, F&& body) {
  if (prefix.empty()) {
    body(out);
    return;
  }
  std::ofstream file(prefix + suffix);
  if (!file) throw ValidationError("cannot open " + prefix + suffix + " for writing");
  body(file);
}

int cmd_differentiate(int n, std::uint64_t seed, const std::string& prefix, std::ostream& out) {
  if (n < 2) throw ValidationError("--n must be at least 2");
  const PotentialPair p = random_potentials(n, seed);
  const TangentField field = differentiate(p.spheroidal, p.toroidal);
  write_spectrum(field.theta, prefix + "_theta.txt");
  write_spectrum(field.phi, prefix + "_phi.txt");
  write_spectrum(p.spheroidal, prefix + "_spheroidal.txt");
  write_spectrum(p.toroidal, prefix + "_toroidal.txt");
  out << "n=" << n << " seed=" << seed << " wrote " << prefix << "_{theta,phi,spheroidal,toroidal}.txt\n";
  return kExitOk;
}

int cmd_decompose(const std::string& theta_path, const std::string& phi_path, const std::string& prefix,
                  const std::string& reference, double tol, std::ostream& out) {
  ZSpectrum theta, phi;
  try {
    theta = read_z_spectrum(theta_path);
    phi = read_z_spectrum(phi_path);
  } catch (const std::exception& e) {
    throw ValidationError(e.what());
  }
  if (theta.degree() != phi.degree())
    throw ValidationError("theta file has n=" + std::to_string(theta.degree()) + " but phi file has n=" +
                          std::to_string(phi.degree()));
  if (theta.degree() < 2) throw ValidationError("decomposition needs n >= 2");

  const HHDResult r = decompose(TangentField(std::move(theta), std::move(phi)), {nullptr, default_thread_count()});
  write_spectrum(r.spheroidal, prefix + "_spheroidal.txt");
  write_spectrum(r.toroidal, prefix + "_toroidal.txt");
  emit(prefix, "_residual.csv", out, [&](std::ostream& os) {
    os << kResidualHeader << '\n';
    for (std::size_t m = 0; m < r.out_of_range_by_order.size(); ++m)
      os << m << ',' << num(m < r.residual_by_order.size() ? r.residual_by_order[m] : 0.0) << ','
         << num(r.out_of_range_by_order[m]) << '\n';
  });

  const double max_residual = *std::max_element(r.residual_by_order.begin(), r.residual_by_order.end());
  out << "n=" << r.spheroidal.degree() + 1 << " max_residual=" << num(max_residual) << '\n';
  if (!r.spheroidal.all_finite() || !r.toroidal.all_finite()) {
    out << "non-finite potentials\n";
    return kExitNumerical;
  }
  if (!reference.empty()) {
    ScalarSpectrum s0, t0;
    try {
      s0 = read_scalar_spectrum(reference + "_spheroidal.txt");
      t0 = read_scalar_spectrum(reference + "_toroidal.txt");
    } catch (const std::exception& e) {
      throw ValidationError(e.what());
    }
    if (s0.degree() != r.spheroidal.degree() || t0.degree() != r.toroidal.degree())
      throw ValidationError("reference potentials have a different degree");
    const double err = combined_relative_error(r.spheroidal, r.toroidal, s0, t0);
    out << "recovery_error=" << num(err) << '\n';
    if (!(err <= tol)) return kExitNumerical;
  }
  return kExitOk;
}

int cmd_roundtrip(int n, std::uint64_t seed, int iters, double tol, const std::string& prefix, std::ostream& out) {
  if (n < 2) throw ValidationError("--n must be at least 2");
  if (iters < 1) throw ValidationError("--iters must be at least 1");
  const auto rows = roundtrip_experiment(n, seed, iters, default_thread_count());
  emit(prefix, "_roundtrip.csv", out, [&](std::ostream& os) { write_roundtrip_csv(os, rows); });
  const bool ok = std::all_of(rows.begin(), rows.end(), [&](const RoundtripRow& r) { return r.rel_error <= tol; });
  return ok ? kExitOk : kExitNumerical;
}

int cmd_bench(std::vector<int> n_list, std::uint64_t seed, int iters, const std::string& prefix, std::ostream& out,
              std::ostream& err) {
  if (iters < 1) throw ValidationError("--iters must be at least 1");
  if (n_list.empty()) n_list = {256, 512, 1024, 2048, 4096};
  for (int n : n_list)
    if (n < 2) throw ValidationError("--n-list entries must be at least 2");
  std::vector<RoundtripRow> means;
  for (int n : n_list) means.push_back(mean_row(roundtrip_experiment(n, seed, iters, default_thread_count())));
  emit(prefix, "_bench.csv", out, [&](std::ostream& os) {
    os << kBenchHeader << '\n';
    for (const auto& r : means)
      os << r.n << ',' << iters << ',' << num(r.rel_error) << ',' << num(r.precompute_seconds) << ','
         << num(r.execute_seconds) << '\n';
  });
  if (means.size() >= 2) {
    std::vector<double> x, pre, exe;
    for (const auto& r : means) {
      x.push_back(r.n);
      pre.push_back(r.precompute_seconds);
      exe.push_back(r.execute_seconds);
    }
    err << "loglog slope: precompute " << num(loglog_slope(x, pre)) << ", execute " << num(loglog_slope(x, exe))
        << '\n';
  }
  return kExitOk;
}

int cmd_cond(const std::vector<int>& n_list_in, const std::vector<int>& m_list, const std::string& prefix,
             std::ostream& out) {
  const std::vector<int> n_list = n_list_in.empty() ? std::vector<int>{8, 16, 32, 64} : n_list_in;
  for (int n : n_list) {
    if (n < 2) throw ValidationError("--n-list entries must be at least 2");
    if (n > conditioning::kDenseScaleLimit)
      throw ValidationError("dense condition numbers are limited to n <= " +
                            std::to_string(conditioning::kDenseScaleLimit));
  }
  for (int m : m_list)
    if (m < 1) throw ValidationError("--m-list entries must be at least 1");
  std::vector<CondRow> rows;
  for (int n : n_list) {
    std::vector<int> ms = m_list;
    if (ms.empty()) {
      ms.resize(n - 1);
      std::iota(ms.begin(), ms.end(), 1);
    }
    // Orders outside 1..n-1 have no system at this n and are skipped.
    for (int m : ms)
      if (m <= n - 1) rows.push_back(cond_row(n, m));
  }
  emit(prefix, "_cond.csv", out, [&](std::ostream& os) {
    os << kCondHeader << '\n';
    for (const auto& r : rows)
      os << r.n << ',' << r.m << ',' << num(r.kappa_R_dense) << ',' << num(r.kappa_M_dense) << ','
         << num(r.theorem_bound) << ',' << num(r.qi_sigma_max) << ',' << num(r.qi_sigma_min) << ','
         << num(r.conjecture) << '\n';
  });
  const bool ok = std::all_of(rows.begin(), rows.end(), [](const CondRow& r) { return r.kappa_R_dense <= r.theorem_bound; });
  return ok ? kExitOk : kExitNumerical;
}

int cmd_verify(const std::string& level, std::ostream& out) {
  verify::VerifyOptions opts;
  opts.level = level == "full" ? verify::Level::full : verify::Level::quick;
  const auto results = verify::run_verification(opts);
  for (const auto& r : results) out << verify::format(r) << '\n';
  const bool ok = verify::all_passed(results);
  out << (ok ? "all suites passed" : "verification FAILED") << '\n';
  return ok ? kExitOk : kExitNumerical;
}

}  // namespace

double combined_relative_error(const ScalarSpectrum& s, const ScalarSpectrum& t, const ScalarSpectrum& s0,
                               const ScalarSpectrum& t0) {
  if (s.size() != s0.size() || t.size() != t0.size())
    throw std::invalid_argument("combined_relative_error: degree mismatch");
  double diff = 0.0, ref = 0.0;
  const auto accumulate = [&](std::span<const double> a, std::span<const double> b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      diff += (a[i] - b[i]) * (a[i] - b[i]);
      ref += b[i] * b[i];
    }
  };
  accumulate(s.data(), s0.data());
  accumulate(t.data(), t0.data());
  return ref > 0.0 ? std::sqrt(diff / ref) : std::sqrt(diff);
}

PotentialPair random_potentials(int n, std::uint64_t seed) {
  PotentialPair p{random_spectrum(n - 1, mix(seed)), random_spectrum(n - 1, mix(seed ^ 0x5555555555555555ULL))};
  p.spheroidal(0, 0) = 0.0;
  p.toroidal(0, 0) = 0.0;
  return p;
}

std::vector<RoundtripRow> roundtrip_experiment(int n, std::uint64_t seed, int iters, int threads) {
  std::vector<RoundtripRow> rows;
  for (int iter = 0; iter <= iters; ++iter) {
    const PotentialPair p = random_potentials(n, mix(seed) + static_cast<std::uint64_t>(iter));
    const TangentField field = differentiate(p.spheroidal, p.toroidal);

    auto t0 = Clock::now();
    FactorCache cache(n);
    cache.prepare(threads);
    const double pre = seconds_since(t0);

    t0 = Clock::now();
    const HHDResult r = decompose(field, {&cache, threads});
    const double exe = seconds_since(t0);

    if (iter == 0) continue;  // warm-up
    rows.push_back({n, iter, combined_relative_error(r.spheroidal, r.toroidal, p.spheroidal, p.toroidal), pre, exe});
  }
  return rows;
}

RoundtripRow mean_row(const std::vector<RoundtripRow>& rows) {
  RoundtripRow m;
  if (rows.empty()) return m;
  m.n = rows.front().n;
  for (const auto& r : rows) {
    m.rel_error += r.rel_error;
    m.precompute_seconds += r.precompute_seconds;
    m.execute_seconds += r.execute_seconds;
  }
  const double k = static_cast<double>(rows.size());
  m.rel_error /= k;
  m.precompute_seconds /= k;
  m.execute_seconds /= k;
  return m;
}

CondRow cond_row(int n, int m) {
  const auto rep = conditioning::kappa_numeric(n, m);
  CondRow row;
  row.n = n;
  row.m = m;
  row.kappa_R_dense = rep.kappa_R;
  row.kappa_M_dense = rep.kappa_M;
  row.theorem_bound = rep.bound;
  row.qi_sigma_max = rep.sigma_max_bound;
  row.qi_sigma_min = rep.sigma_min_bound;
  if (m == 1 && n - m > 1) row.conjecture = conditioning::inverse_norm_conjecture(n - m);
  return row;
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("loglog_slope: need two or more points");
  const double k = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (k * sxy - sx * sy) / (k * sxx - sx * sx);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Helmholtz-Hodge decomposition of tangent fields on the sphere", "hhd"};
  app.require_subcommand(1);

  int n = 0;
  std::uint64_t seed = 1;
  int iters = 10;
  double tol = 1e-12;
  std::string in_theta, in_phi, out_prefix, ref_prefix, level = "quick";
  std::vector<int> n_list, m_list;

  auto* dec = app.add_subcommand("decompose", "Z-basis field files -> spheroidal/toroidal potentials");
  dec->add_option("--input-theta", in_theta, "theta component (Z basis)")->required();
  dec->add_option("--input-phi", in_phi, "phi component (Z basis)")->required();
  dec->add_option("--out-prefix", out_prefix, "writes <prefix>_{spheroidal,toroidal}.txt and _residual.csv")->required();
  dec->add_option("--reference-prefix", ref_prefix, "compare against <prefix>_{spheroidal,toroidal}.txt");
  dec->add_option("--tol", tol, "recovery error threshold with --reference-prefix");

  auto* dif = app.add_subcommand("differentiate", "random potentials -> Z-basis tangent field");
  dif->add_option("--n", n, "truncation degree (potentials carry degrees <= n-1)")->required();
  dif->add_option("--seed", seed);
  dif->add_option("--out-prefix", out_prefix)->required();

  auto* rt = app.add_subcommand("roundtrip", "decompose(differentiate(s, t)) error and timings");
  rt->add_option("--n", n)->required();
  rt->add_option("--seed", seed);
  rt->add_option("--iters", iters);
  rt->add_option("--tol", tol, "exit 2 if any iteration exceeds this relative error");
  rt->add_option("--out-prefix", out_prefix);

  auto* bench = app.add_subcommand("bench", "mean roundtrip timings over a list of n");
  bench->add_option("--n-list", n_list)->delimiter(',');
  bench->add_option("--seed", seed);
  bench->add_option("--iters", iters);
  bench->add_option("--out-prefix", out_prefix);

  auto* cond = app.add_subcommand("cond", "dense condition numbers against the bounds");
  cond->add_option("--n-list", n_list)->delimiter(',');
  cond->add_option("--m-list", m_list, "default: every m in 1..n-1")->delimiter(',');
  cond->add_option("--out-prefix", out_prefix);

  auto* ver = app.add_subcommand("verify", "run the invariant suites");
  ver->add_option("--level", level)->check(CLI::IsMember({"quick", "full"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (*dec) return cmd_decompose(in_theta, in_phi, out_prefix, ref_prefix, tol, out);
    if (*dif) return cmd_differentiate(n, seed, out_prefix, out);
    if (*rt) return cmd_roundtrip(n, seed, iters, tol, out_prefix, out);
    if (*bench) return cmd_bench(n_list, seed, iters, out_prefix, out, err);
    if (*cond) return cmd_cond(n_list, m_list, out_prefix, out);
    if (*ver) return cmd_verify(level, out);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumerical;
  }
  return kExitValidation;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args(argv + (argc > 0 ? 1 : 0), argv + argc);
  return run(args, out, err);
}

}  // namespace hhd::cli
