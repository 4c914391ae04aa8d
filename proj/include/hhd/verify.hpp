#pragma once

#include <string>
#include <vector>

namespace hhd::verify {

enum class Level { quick, full };

/// The conversion coefficients the pointwise suite checks. Swappable so a
/// deliberately broken coefficient can be shown to fail the suite.
struct ConversionCoefficients {
  double (*alpha)(int, int);
  double (*beta)(int, int);
  double (*gamma)(int, int);
  double (*delta)(int, int);
};

ConversionCoefficients library_coefficients();

struct SuiteResult {
  std::string name;
  bool passed = false;
  double worst = 0.0;      // largest observed error or violation
  double tolerance = 0.0;
  std::string detail;
};

struct VerifyOptions {
  Level level = Level::quick;
  ConversionCoefficients coefficients = library_coefficients();
};

// Individual suites, in the order run_verification runs them.
SuiteResult recurrence_bounds_suite(Level level);
SuiteResult cholesky_identity_suite(Level level);
SuiteResult structure_suite(Level level);
SuiteResult pointwise_identity_suite(Level level, const ConversionCoefficients& coefficients);
SuiteResult conditioning_suite(Level level);
SuiteResult oracle_equivalence_suite(Level level);
SuiteResult roundtrip_suite(Level level);

std::vector<SuiteResult> run_verification(const VerifyOptions& options = {});

bool all_passed(const std::vector<SuiteResult>& results);

/// "PASS name  worst=... tol=...  detail"
std::string format(const SuiteResult& result);

}  // namespace hhd::verify
