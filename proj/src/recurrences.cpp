#include "hhd/recurrences.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace hhd::recurrences {

namespace {

void require(bool ok, const char* name, int l, int m) {
  if (!ok)
    throw std::domain_error(std::string(name) + "(" + std::to_string(l) + ", " + std::to_string(m) +
                            ") outside its domain");
}

}  // namespace

double alpha(int l, int m) {
  require(m >= 0 && l >= m && l >= 1, "alpha", l, m);
  const double L = l, M = m;
  return -std::sqrt((L - M) * (L - M + 1) / ((2 * L - 1) * (2 * L + 1)));
}

double beta(int l, int m) {
  require(l >= 0 && m >= 0, "beta", l, m);
  const double L = l, M = m;
  return std::sqrt((L + M) * (L + M + 1) / ((2 * L + 1) * (2 * L + 3)));
}

double gamma(int l, int m) {
  require(m >= 0 && l >= m && l >= 1, "gamma", l, m);
  const double L = l, M = m;
  return -(L + 1) * std::sqrt((L - M) * (L + M) / ((2 * L - 1) * (2 * L + 1)));
}

double delta(int l, int m) {
  require(m >= 0 && l >= m, "delta", l, m);
  const double L = l, M = m;
  return L * std::sqrt((L - M + 1) * (L + M + 1) / ((2 * L + 1) * (2 * L + 3)));
}

double chol_d(int l, int m) {
  require(l >= 1 && m >= 1, "chol_d", l, m);
  const double L = l, M = m;
  return (L + M - 1) *
         std::sqrt((L + M + 1) * (L + 2 * M) * (L + 2 * M + 1) / ((L + M) * (2 * L + 2 * M - 1) * (2 * L + 2 * M + 1)));
}

double chol_e(int l, int m) {
  require(l >= 1 && m >= 1, "chol_e", l, m);
  const double L = l, M = m;
  return std::sqrt(L * (L + 2 * M + 1) / ((L + M) * (L + M + 1)));
}

double chol_f(int l, int m) {
  require(l >= 1 && m >= 1, "chol_f", l, m);
  const double L = l, M = m;
  return (L + M + 2) * std::sqrt(L * (L + 1) * (L + M) / ((L + M + 1) * (2 * L + 2 * M + 1) * (2 * L + 2 * M + 3)));
}

}  // namespace hhd::recurrences
