#include <doctest.h>

#include <stdexcept>

#include "hhd/recurrences.hpp"
#include "hhd/verify.hpp"

using namespace hhd::verify;

namespace {
double flipped_alpha(int l, int m) { return -hhd::recurrences::alpha(l, m); }
}  // namespace

TEST_CASE("quick verification passes") {
  const auto results = run_verification({Level::quick});
  CHECK(results.size() >= 6);
  for (const auto& r : results) {
    INFO(format(r));
    CHECK(r.passed);
  }
  CHECK(all_passed(results));
}

TEST_CASE("flipping alpha's sign fails the pointwise identity suite only") {
  VerifyOptions opts;
  opts.coefficients.alpha = &flipped_alpha;
  const auto results = run_verification(opts);
  for (const auto& r : results) {
    INFO(format(r));
    if (r.name == "pointwise-identity")
      CHECK_FALSE(r.passed);
    else
      CHECK(r.passed);
  }
  CHECK_FALSE(all_passed(results));
}

TEST_CASE("suite lines are labelled") {
  SuiteResult r;
  r.name = "demo";
  r.passed = false;
  CHECK(format(r).rfind("FAIL demo", 0) == 0);
}
