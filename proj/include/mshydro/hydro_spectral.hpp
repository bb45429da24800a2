#pragma once

// Periodic spectral representation of the hydrodynamic fields (u, p, s) on
// [0, 2 pi) and exact per-mode propagation for the hydrodynamic models.
//
// Plane-wave convention: a perturbation exp(sigma t - i k x) has d/dx -> -i k.
// A DFT mode exp(i m x) is therefore the plane wave with k = -m; every symbol
// lookup below goes through that substitution.

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "mshydro/coefficients.hpp"
#include "mshydro/fft.hpp"
#include "mshydro/model.hpp"

namespace mshydro {

enum class HydroField { U = 0, P = 1, S = 2 };

/// Real fields on x_j = 2 pi j / N. Number density and temperature are derived
/// from p and s through s = 3/2 p - 5/2 n, T = p - n.
class HydroState {
 public:
  HydroState(std::vector<double> u, std::vector<double> p, std::vector<double> s, double time = 0.0);

  static HydroState zeros(std::size_t grid_size, double time = 0.0);

  std::size_t grid_size() const noexcept { return u_.size(); }
  double time() const noexcept { return time_; }
  double x(std::size_t j) const;

  const std::vector<double>& u() const noexcept { return u_; }
  const std::vector<double>& p() const noexcept { return p_; }
  const std::vector<double>& s() const noexcept { return s_; }
  const std::vector<double>& field(HydroField f) const;

  std::vector<double> n() const;
  std::vector<double> temperature() const;

 private:
  std::vector<double> u_, p_, s_;
  double time_;
};

/// Mode coefficients of (u, p, s), FFT ordering (see fft.hpp).
class SpectralState {
 public:
  SpectralState(std::array<std::vector<Complex>, 3> modes, double time);

  std::size_t grid_size() const noexcept { return modes_[0].size(); }
  double time() const noexcept { return time_; }

  /// Coefficient of exp(i m x) for m in [-N/2, N/2).
  Complex mode(HydroField f, int m) const;
  const std::vector<Complex>& modes(HydroField f) const { return modes_[static_cast<int>(f)]; }

 private:
  std::array<std::vector<Complex>, 3> modes_;
  double time_;
};

SpectralState to_modes(const HydroState& state);

/// Throws DomainError if any field's spectrum is not Hermitian.
HydroState from_modes(const SpectralState& spectrum);

/// 3x3 propagator exp(M dt) acting on (u, p, s) mode coefficients at plane-wave
/// wavenumber k. For RiemannDecoupled the decoupled symbol is conjugated back to
/// the (u, p, s) basis. MomentReference is rejected (see moment_reference.hpp).
Eigen::Matrix3cd mode_propagator(ModelId model, double k, double eps, const EigenvalueSet& set, double dt);

/// Advance every mode by the exact exponential of its symbol. The mean and
/// Nyquist modes are propagated with the even (real) part of the symbol so
/// that the result stays Hermitian.
SpectralState evolve(const SpectralState& spectrum, ModelId model, double eps, const EigenvalueSet& set, double dt);

HydroState evolve(const HydroState& state, ModelId model, double eps, const EigenvalueSet& set, double dt);

/// R+ = a0 u + p,  R- = a0 u - p.
std::pair<std::vector<double>, std::vector<double>> riemann_split(const std::vector<double>& u,
                                                                  const std::vector<double>& p);
/// u = (R+ + R-) / (2 a0),  p = (R+ - R-) / 2.
std::pair<std::vector<double>, std::vector<double>> riemann_join(const std::vector<double>& r_plus,
                                                                 const std::vector<double>& r_minus);

/// h1 = a_T psi11 + a_u psi02 at each grid point.
struct FirstOrderCorrection {
  std::vector<double> a_temperature;  // (1/lambda11) dT/dx
  std::vector<double> a_velocity;     // (1/lambda02) du/dx
};

FirstOrderCorrection first_order_correction(const HydroState& state, const EigenvalueSet& set);

struct H1Fluxes {
  std::vector<double> stress;     // integral f_M psi02 h1 dc
  std::vector<double> heat_flux;  // integral f_M psi11 h1 dc
};

/// Stress (4 / (3 lambda02)) du/dx and heat flux (5 / (2 lambda11)) dT/dx of the
/// first-order kinetic correction, per unit Knudsen number. Computed in closed
/// form and again through exact Gaussian inner products of h1 with psi02 and
/// psi11; throws ConsistencyError if the two disagree by more than 1e-10.
H1Fluxes h1_fluxes(const HydroState& state, const EigenvalueSet& set);

/// Discrete L2 norm on [0, 2 pi):  sqrt(2 pi / N * sum f_j^2).
double l2_norm(const std::vector<double>& f);

/// (5/3) ||u||^2 + ||p||^2, conserved by the Euler model.
double acoustic_energy(const HydroState& state);

}  // namespace mshydro
