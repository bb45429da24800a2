#pragma once

// Closed five-moment kinetic system used as ground truth for the hydrodynamic
// models. Fields: n, u, p, the non-equilibrium stress Pi = <psi02 phi> and the
// heat flux q = <psi11 phi>. Higher moments (psi03, psi12, psi20) are dropped;
// collisions act diagonally with rates lambda02/eps and lambda11/eps:
//
//   n_t  = -u_x
//   u_t  = -(p + Pi)_x
//   p_t  = -(5/3) u_x - (2/3) q_x
//   Pi_t = -(4/3) u_x - (8/15) q_x + (lambda02 / eps) Pi
//   q_t  = -Pi_x - (5/2) (p - n)_x + (lambda11 / eps) q

#include <array>
#include <vector>

#include <Eigen/Dense>

#include "mshydro/coefficients.hpp"
#include "mshydro/fft.hpp"
#include "mshydro/hydro_spectral.hpp"

namespace mshydro {

enum class MomentField { N = 0, U = 1, P = 2, Stress = 3, HeatFlux = 4 };

using MomentMatrix = Eigen::Matrix<Complex, 5, 5>;

/// Symbol at plane-wave wavenumber k; throws DomainError unless eps > 0.
MomentMatrix moment_symbol(double k, double eps, const EigenvalueSet& set);

class MomentState {
 public:
  MomentState(std::array<std::vector<Complex>, 5> modes, double eps, EigenvalueSet set, double time = 0.0);

  /// Local-equilibrium embedding of a hydrodynamic state: n = (3p - 2s)/5, Pi = q = 0.
  static MomentState from_hydro(const HydroState& state, double eps, const EigenvalueSet& set);

  std::size_t grid_size() const noexcept { return modes_[0].size(); }
  double eps() const noexcept { return eps_; }
  const EigenvalueSet& eigenvalues() const noexcept { return set_; }
  double time() const noexcept { return time_; }

  Complex mode(MomentField f, int m) const;
  const std::vector<Complex>& modes(MomentField f) const { return modes_[static_cast<int>(f)]; }

 private:
  std::array<std::vector<Complex>, 5> modes_;
  double eps_;
  EigenvalueSet set_;
  double time_;
};

/// Exact per-mode propagation over dt (> 0).
MomentState evolve_moments(const MomentState& state, double dt);

struct HydroProjection {
  HydroState hydro;
  std::vector<double> stress;
  std::vector<double> heat_flux;
};

/// (u, p, s = 3/2 p - 5/2 n) plus the non-hydrodynamic fields Pi and q.
HydroProjection hydro_projection(const MomentState& state);

/// Transport coefficients recovered by quasi-steady elimination of Pi and q
/// from the symbol entries (Pi_t = 0 without q coupling, q_t = 0 without Pi
/// coupling). Expected: viscosity = 4/(3 lambda02), conduction = 5/(3 lambda11),
/// i.e. u_t gains -eps viscosity u_xx and p_t gains -eps conduction T_xx.
struct NsClosure {
  double viscosity;
  double conduction;
};

NsClosure ns_closure_from_symbol(double k, double eps, const EigenvalueSet& set);

}  // namespace mshydro
