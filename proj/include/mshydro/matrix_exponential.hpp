#pragma once

#include <Eigen/Dense>

namespace mshydro {

/// exp(m * t) for a small dense complex matrix.
///
/// Uses the eigendecomposition m = V diag(sigma) V^-1. When V is
/// ill-conditioned (condition number above 1e10, i.e. m is defective to
/// within about 1e-10) it falls back to Pade scaling-and-squaring.
Eigen::MatrixXcd matrix_exponential(const Eigen::MatrixXcd& m, double t);

/// True if the last call on this thread took the scaling-and-squaring path.
bool last_exponential_used_fallback();

}  // namespace mshydro
