#pragma once

// Symbol matrices and dispersion relations sigma(k) for plane waves
// exp(sigma t - i k x).

#include <complex>
#include <span>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "mshydro/coefficients.hpp"
#include "mshydro/model.hpp"

namespace mshydro {

enum class Branch { SoundPlus, SoundMinus, Entropy, ShearRelaxation, HeatRelaxation };

std::string_view to_string(Branch branch);

/// Closed-form growth rates at Burnett order:
///   Entropy:  sigma = eps k^2 / lambda11
///   Sound+-:  sigma = +-i a0 k (1 + eps^2 k^2 beta_u) - eps k^2 D
/// SoundPlus is the right-running wave. Relaxation branches are rejected.
std::complex<double> sigma_asymptotic(double k, double eps, const EigenvalueSet& set, Branch branch);

/// M(k) with d/dt (mode vector) = M (mode vector). Euler ignores eps. The
/// hydrodynamic models need eps >= 0, MomentReference eps > 0.
Eigen::MatrixXcd symbol_matrix(ModelId model, double k, double eps, const EigenvalueSet& set);

Eigen::VectorXcd symbol_eigenvalues(ModelId model, double k, double eps, const EigenvalueSet& set);

/// Branch labels carried by a model, in output order.
std::vector<Branch> model_branches(ModelId model);

struct BranchValue {
  Branch branch;
  std::complex<double> sigma;
};

struct DispersionTable {
  ModelId model;
  double eps;
  std::vector<double> k_grid;
  /// rows[i] holds one entry per branch at k_grid[i], sorted by branch.
  std::vector<std::vector<BranchValue>> rows;

  std::complex<double> sigma(std::size_t k_index, Branch branch) const;
};

/// Numerical eigenvalues on an ascending k grid with persistent branch labels.
/// The first wavenumber is labelled against analytic small-k limits; each
/// later one is matched to its predecessor by minimum total distance in the
/// complex plane. Throws BranchCollisionError when a label's nearest two
/// candidates are equidistant to within 1e-12; refine the grid in that case.
/// For MomentReference the first k should satisfy k <= 0.1 |lambda02| / eps.
DispersionTable branches(ModelId model, std::span<const double> k_grid, double eps, const EigenvalueSet& set);

}  // namespace mshydro
