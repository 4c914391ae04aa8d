#pragma once

// Closed-form coefficients of the three-term relations between Z, cscθY and
// the gradient of Y, and the entries of the explicit Cholesky factor of C + D.
// All functions take the order as |m| >= 0 and throw std::domain_error
// outside their domain.

namespace hhd::recurrences {

/// Z_{l,m} -> cscθ Y_{l-1,m} coefficient. Requires l >= m, l >= 1.
double alpha(int l, int m);
/// Z_{l,m} -> cscθ Y_{l+1,m} coefficient. Requires l, m >= 0.
double beta(int l, int m);
/// ∂θ Y_{l,m} -> cscθ Y_{l-1,m} coefficient. Requires l >= m, l >= 1.
double gamma(int l, int m);
/// ∂θ Y_{l,m} -> cscθ Y_{l+1,m} coefficient. Requires l >= m >= 0.
double delta(int l, int m);

// Diagonal, first and second superdiagonal magnitudes of R (R = diag d,
// -e, -f). Require l >= 1, m >= 1.
double chol_d(int l, int m);
double chol_e(int l, int m);
double chol_f(int l, int m);

}  // namespace hhd::recurrences
