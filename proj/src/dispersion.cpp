#include "mshydro/dispersion.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "mshydro/errors.hpp"
#include "mshydro/moment_reference.hpp"

namespace mshydro {

namespace {

using cd = std::complex<double>;

constexpr double kCollisionTolerance = 1e-12;

std::vector<cd> analytic_seeds(ModelId model, double k, double eps, const EigenvalueSet& set) {
  const double a0 = sound_speed();
  const auto ns = transport_ns(set);
  const auto bu = transport_burnett(set);
  switch (model) {
    case ModelId::Euler:
      return {cd(0, a0 * k), cd(0, -a0 * k), cd(0)};
    case ModelId::NavierStokes: {
      const double damp = -eps * ns.sound_diffusivity * k * k;
      return {cd(damp, a0 * k), cd(damp, -a0 * k), cd(-eps * ns.entropy_diffusivity * k * k)};
    }
    case ModelId::Burnett:
    case ModelId::RiemannDecoupled:
    case ModelId::MomentReference: {
      const double damp = -eps * ns.sound_diffusivity * k * k;
      const double freq = a0 * k * (1.0 + eps * eps * bu.beta_u * k * k);
      std::vector<cd> seeds{cd(damp, freq), cd(damp, -freq), cd(-eps * ns.entropy_diffusivity * k * k)};
      if (model == ModelId::MomentReference) {
        seeds.emplace_back(set.lambda02() / eps);
        seeds.emplace_back(set.lambda11() / eps);
      }
      return seeds;
    }
  }
  return {};
}

// Assign candidates to labelled previous values. Returns perm with
// perm[label] = candidate index.
std::vector<std::size_t> match(const std::vector<cd>& previous, const std::vector<cd>& candidates,
                               const std::vector<Branch>& labels, double k) {
  const std::size_t n = previous.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::size_t> best = perm;
  double best_cost = std::numeric_limits<double>::infinity();
  do {
    double cost = 0.0;
    for (std::size_t b = 0; b < n; ++b) cost += std::norm(previous[b] - candidates[perm[b]]);
    if (cost < best_cost) {
      best_cost = cost;
      best = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  for (std::size_t b = 0; b < n; ++b) {
    std::vector<double> d(n);
    for (std::size_t c = 0; c < n; ++c) d[c] = std::abs(previous[b] - candidates[c]);
    std::sort(d.begin(), d.end());
    if (d[1] - d[0] <= kCollisionTolerance) {
      std::ostringstream os;
      os << "branch collision at k = " << k << " on branch " << to_string(labels[b])
         << ": two eigenvalues are equidistant from its previous value; refine the k grid";
      throw BranchCollisionError(os.str());
    }
  }
  return best;
}

void check_eps(ModelId model, double eps) {
  if (model == ModelId::MomentReference) {
    if (!(eps > 0.0)) throw DomainError("the moment reference needs eps > 0");
  } else if (!(eps >= 0.0)) {
    throw DomainError("eps must be nonnegative");
  }
}

}  // namespace

std::string_view to_string(Branch branch) {
  switch (branch) {
    case Branch::SoundPlus: return "sound_plus";
    case Branch::SoundMinus: return "sound_minus";
    case Branch::Entropy: return "entropy";
    case Branch::ShearRelaxation: return "shear_relaxation";
    case Branch::HeatRelaxation: return "heat_relaxation";
  }
  return "?";
}

std::complex<double> sigma_asymptotic(double k, double eps, const EigenvalueSet& set, Branch branch) {
  if (!(k > 0.0)) throw DomainError("sigma_asymptotic needs k > 0");
  if (!(eps > 0.0)) throw DomainError("sigma_asymptotic needs eps > 0");
  if (branch == Branch::Entropy) return {eps * k * k / set.lambda11(), 0.0};
  if (branch != Branch::SoundPlus && branch != Branch::SoundMinus)
    throw DomainError("no closed-form dispersion relation for relaxation branches");
  const auto ns = transport_ns(set);
  const auto bu = transport_burnett(set);
  const double sign = branch == Branch::SoundPlus ? 1.0 : -1.0;
  return {-eps * k * k * ns.sound_diffusivity, sign * sound_speed() * k * (1.0 + k * k * eps * eps * bu.beta_u)};
}

Eigen::MatrixXcd symbol_matrix(ModelId model, double k, double eps, const EigenvalueSet& set) {
  check_eps(model, eps);
  if (model == ModelId::MomentReference) return moment_symbol(k, eps, set);
  if (model == ModelId::Euler) eps = 0.0;

  const cd ik(0.0, k);
  const double k2 = k * k;
  const auto ns = transport_ns(set);
  const auto bu = transport_burnett(set);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(3, 3);

  if (model == ModelId::RiemannDecoupled) {
    const double freq = sound_speed() * k * (1.0 + eps * eps * bu.beta_u * k2);
    const double damp = -eps * ns.sound_diffusivity * k2;
    m(0, 0) = cd(damp, freq);
    m(1, 1) = cd(damp, -freq);
    m(2, 2) = -eps * ns.entropy_diffusivity * k2;
    return m;
  }

  // u_t = -p_x, p_t = -(5/3) u_x with d/dx -> -ik.
  m(0, 1) = ik;
  m(1, 0) = sound_speed_squared() * ik;
  if (model == ModelId::Euler) return m;

  m(0, 0) = -eps * ns.sound_diffusivity * k2;
  m(1, 1) = -eps * ns.sound_diffusivity * k2;
  m(2, 2) = -eps * ns.entropy_diffusivity * k2;
  if (model == ModelId::Burnett) {
    // d^3/dx^3 -> i k^3
    m(0, 1) += ik * (eps * eps * bu.beta_u * k2);
    m(1, 0) += ik * (eps * eps * bu.beta_p * k2);
  }
  return m;
}

Eigen::VectorXcd symbol_eigenvalues(ModelId model, double k, double eps, const EigenvalueSet& set) {
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(symbol_matrix(model, k, eps, set), false);
  return solver.eigenvalues();
}

std::vector<Branch> model_branches(ModelId model) {
  std::vector<Branch> labels{Branch::SoundPlus, Branch::SoundMinus, Branch::Entropy};
  if (model == ModelId::MomentReference) {
    labels.push_back(Branch::ShearRelaxation);
    labels.push_back(Branch::HeatRelaxation);
  }
  return labels;
}

std::complex<double> DispersionTable::sigma(std::size_t k_index, Branch branch) const {
  for (const auto& entry : rows.at(k_index))
    if (entry.branch == branch) return entry.sigma;
  throw DomainError("branch " + std::string(to_string(branch)) + " not present in table");
}

DispersionTable branches(ModelId model, std::span<const double> k_grid, double eps, const EigenvalueSet& set) {
  check_eps(model, eps);
  if (k_grid.empty()) throw DomainError("empty k grid");
  for (std::size_t i = 0; i < k_grid.size(); ++i) {
    if (!(k_grid[i] > 0.0)) throw DomainError("k grid must be positive");
    if (i > 0 && !(k_grid[i] > k_grid[i - 1])) throw DomainError("k grid must be strictly ascending");
  }

  const auto labels = model_branches(model);
  DispersionTable table{model, eps, std::vector<double>(k_grid.begin(), k_grid.end()), {}};
  table.rows.reserve(k_grid.size());

  std::vector<cd> previous = analytic_seeds(model, k_grid[0], eps, set);
  for (double k : k_grid) {
    const Eigen::VectorXcd eig = symbol_eigenvalues(model, k, eps, set);
    const std::vector<cd> candidates(eig.data(), eig.data() + eig.size());
    const auto assignment = match(previous, candidates, labels, k);

    std::vector<BranchValue> row;
    for (std::size_t b = 0; b < labels.size(); ++b) {
      previous[b] = candidates[assignment[b]];
      row.push_back({labels[b], previous[b]});
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace mshydro
