#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hhd/spectra.hpp"

// Command-line surface. Every command writes CSV with a header row to the
// output stream (or to files under --out-prefix) and diagnostics to err.
//
// Exit codes: 0 success, 1 validation failure, 2 numerical failure.

namespace hhd::cli {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitNumerical = 2;

// CSV headers. Column order is part of the interface.
inline constexpr const char* kResidualHeader = "abs_m,residual,out_of_range";
inline constexpr const char* kRoundtripHeader = "n,iter,rel_error,precompute_seconds,execute_seconds";
inline constexpr const char* kBenchHeader = "n,iters,rel_error,precompute_seconds,execute_seconds";
inline constexpr const char* kCondHeader =
    "n,m,kappa_R_dense,kappa_M_dense,theorem_bound,qi_sigma_max,qi_sigma_min,conjecture";

/// sqrt(|s - s0|^2 + |t - t0|^2) / sqrt(|s0|^2 + |t0|^2).
double combined_relative_error(const ScalarSpectrum& s, const ScalarSpectrum& t, const ScalarSpectrum& s0,
                               const ScalarSpectrum& t0);

/// Standard-normal potentials of degree n-1 with the (0,0) entries zeroed.
struct PotentialPair {
  ScalarSpectrum spheroidal;
  ScalarSpectrum toroidal;
};
PotentialPair random_potentials(int n, std::uint64_t seed);

struct RoundtripRow {
  int n = 0;
  int iter = 0;  // 1-based; the warm-up run is not reported
  double rel_error = 0.0;
  double precompute_seconds = 0.0;
  double execute_seconds = 0.0;
};

/// iters + 1 runs of factor, differentiate, decompose on fresh random
/// potentials; the first is a warm-up and is dropped. Only factorization and
/// decomposition are timed (monotonic clock).
std::vector<RoundtripRow> roundtrip_experiment(int n, std::uint64_t seed, int iters, int threads);

RoundtripRow mean_row(const std::vector<RoundtripRow>& rows);

struct CondRow {
  int n = 0;
  int m = 0;
  double kappa_R_dense = 0.0;
  double kappa_M_dense = 0.0;
  double theorem_bound = 0.0;
  double qi_sigma_max = 0.0;
  std::optional<double> qi_sigma_min;  // m >= 2 only
  std::optional<double> conjecture;    // m = 1 only: estimate of ||R^{-1}||_2
};

CondRow cond_row(int n, int m);

/// Least-squares slope of log(y) against log(x).
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

/// Parses and runs one command; args exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hhd::cli
