#include "mshydro/matrix_exponential.hpp"

#include <complex>

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/MatrixFunctions>

namespace mshydro {

namespace {
constexpr double kMaxEigenvectorCondition = 1e10;
thread_local bool g_used_fallback = false;
}  // namespace

Eigen::MatrixXcd matrix_exponential(const Eigen::MatrixXcd& m, double t) {
  g_used_fallback = false;
  if (m.isZero(0.0)) return Eigen::MatrixXcd::Identity(m.rows(), m.cols());

  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(m, true);
  if (solver.info() == Eigen::Success) {
    const Eigen::MatrixXcd& v = solver.eigenvectors();
    Eigen::PartialPivLU<Eigen::MatrixXcd> lu(v);
    const Eigen::MatrixXcd v_inv = lu.inverse();
    const double cond = v.cwiseAbs().colwise().sum().maxCoeff() * v_inv.cwiseAbs().colwise().sum().maxCoeff();
    if (std::isfinite(cond) && cond < kMaxEigenvectorCondition) {
      Eigen::VectorXcd growth(m.rows());
      for (Eigen::Index i = 0; i < growth.size(); ++i) growth(i) = std::exp(solver.eigenvalues()(i) * t);
      return v * growth.asDiagonal() * v_inv;
    }
  }
  g_used_fallback = true;
  const Eigen::MatrixXcd scaled = m * t;
  return scaled.exp();
}

bool last_exponential_used_fallback() { return g_used_fallback; }

}  // namespace mshydro
