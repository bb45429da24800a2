#include "mshydro/hydro_spectral.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "mshydro/dispersion.hpp"
#include "mshydro/errors.hpp"
#include "mshydro/matrix_exponential.hpp"
#include "mshydro/velocity_space.hpp"

namespace mshydro {

namespace {

constexpr double kFluxRouteTolerance = 1e-10;

// Maps (u, p, s) to (R+, R-, s).
Eigen::Matrix3cd riemann_basis() {
  const double a0 = sound_speed();
  Eigen::Matrix3cd s = Eigen::Matrix3cd::Zero();
  s(0, 0) = a0;
  s(0, 1) = 1.0;
  s(1, 0) = a0;
  s(1, 1) = -1.0;
  s(2, 2) = 1.0;
  return s;
}

Eigen::Matrix3cd even_part(const Eigen::Matrix3cd& m) { return m.real().cast<Complex>(); }

}  // namespace

HydroState::HydroState(std::vector<double> u, std::vector<double> p, std::vector<double> s, double time)
    : u_(std::move(u)), p_(std::move(p)), s_(std::move(s)), time_(time) {
  if (u_.size() != p_.size() || u_.size() != s_.size()) throw DomainError("u, p, s must share one grid");
  check_grid_size(u_.size());
}

HydroState HydroState::zeros(std::size_t grid_size, double time) {
  return HydroState(std::vector<double>(grid_size), std::vector<double>(grid_size), std::vector<double>(grid_size),
                    time);
}

double HydroState::x(std::size_t j) const {
  return 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(grid_size());
}

const std::vector<double>& HydroState::field(HydroField f) const {
  switch (f) {
    case HydroField::U: return u_;
    case HydroField::P: return p_;
    case HydroField::S: return s_;
  }
  return u_;
}

std::vector<double> HydroState::n() const {
  std::vector<double> out(grid_size());
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = (3.0 * p_[j] - 2.0 * s_[j]) / 5.0;
  return out;
}

std::vector<double> HydroState::temperature() const {
  std::vector<double> out(grid_size());
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = 0.4 * (p_[j] + s_[j]);
  return out;
}

SpectralState::SpectralState(std::array<std::vector<Complex>, 3> modes, double time)
    : modes_(std::move(modes)), time_(time) {
  if (modes_[0].size() != modes_[1].size() || modes_[0].size() != modes_[2].size())
    throw DomainError("spectral fields must share one grid");
  check_grid_size(modes_[0].size());
}

Complex SpectralState::mode(HydroField f, int m) const {
  const int half = static_cast<int>(grid_size() / 2);
  if (m < -half || m >= half) throw DomainError("wavenumber out of range");
  return modes_[static_cast<int>(f)][index_of(m, grid_size())];
}

SpectralState to_modes(const HydroState& state) {
  return SpectralState({forward_dft(state.u()), forward_dft(state.p()), forward_dft(state.s())}, state.time());
}

HydroState from_modes(const SpectralState& spectrum) {
  return HydroState(inverse_dft(spectrum.modes(HydroField::U)), inverse_dft(spectrum.modes(HydroField::P)),
                    inverse_dft(spectrum.modes(HydroField::S)), spectrum.time());
}

Eigen::Matrix3cd mode_propagator(ModelId model, double k, double eps, const EigenvalueSet& set, double dt) {
  if (model == ModelId::MomentReference)
    throw DomainError("the moment reference is propagated by evolve_moments");
  const Eigen::Matrix3cd symbol = symbol_matrix(model, k, eps, set);
  const Eigen::Matrix3cd step = matrix_exponential(symbol, dt);
  if (model != ModelId::RiemannDecoupled) return step;
  const Eigen::Matrix3cd basis = riemann_basis();
  return basis.inverse() * step * basis;
}

SpectralState evolve(const SpectralState& spectrum, ModelId model, double eps, const EigenvalueSet& set, double dt) {
  if (!(dt > 0.0)) throw DomainError("dt must be positive");
  if (model == ModelId::MomentReference)
    throw DomainError("the moment reference is propagated by evolve_moments");
  const std::size_t n = spectrum.grid_size();
  const int half = static_cast<int>(n / 2);
  std::array<std::vector<Complex>, 3> out;
  for (auto& f : out) f.assign(n, Complex(0.0));

  // Modes m and -m are conjugate; propagate m in [0, N/2] and mirror.
  for (int m = 0; m <= half; ++m) {
    Eigen::Matrix3cd step;
    if (m == 0 || m == half) {
      const Eigen::Matrix3cd symbol = symbol_matrix(model, -static_cast<double>(m), eps, set);
      Eigen::Matrix3cd even = even_part(symbol);
      if (model == ModelId::RiemannDecoupled) {
        const Eigen::Matrix3cd basis = riemann_basis();
        even = basis.inverse() * even * basis;
      }
      step = matrix_exponential(even, dt);
    } else {
      step = mode_propagator(model, -static_cast<double>(m), eps, set, dt);
    }
    const std::size_t j = index_of(m, n);
    Eigen::Vector3cd v(spectrum.modes(HydroField::U)[j], spectrum.modes(HydroField::P)[j],
                       spectrum.modes(HydroField::S)[j]);
    const Eigen::Vector3cd w = step * v;
    for (int f = 0; f < 3; ++f) {
      out[f][j] = (m == 0 || m == half) ? Complex(w(f).real(), 0.0) : w(f);
      if (m != 0 && m != half) out[f][index_of(-m, n)] = std::conj(w(f));
    }
  }
  return SpectralState(std::move(out), spectrum.time() + dt);
}

HydroState evolve(const HydroState& state, ModelId model, double eps, const EigenvalueSet& set, double dt) {
  return from_modes(evolve(to_modes(state), model, eps, set, dt));
}

std::pair<std::vector<double>, std::vector<double>> riemann_split(const std::vector<double>& u,
                                                                  const std::vector<double>& p) {
  if (u.size() != p.size()) throw DomainError("u and p must share one grid");
  const double a0 = sound_speed();
  std::vector<double> plus(u.size()), minus(u.size());
  for (std::size_t j = 0; j < u.size(); ++j) {
    plus[j] = a0 * u[j] + p[j];
    minus[j] = a0 * u[j] - p[j];
  }
  return {std::move(plus), std::move(minus)};
}

std::pair<std::vector<double>, std::vector<double>> riemann_join(const std::vector<double>& r_plus,
                                                                 const std::vector<double>& r_minus) {
  if (r_plus.size() != r_minus.size()) throw DomainError("R+ and R- must share one grid");
  const double a0 = sound_speed();
  std::vector<double> u(r_plus.size()), p(r_plus.size());
  for (std::size_t j = 0; j < u.size(); ++j) {
    u[j] = (r_plus[j] + r_minus[j]) / (2.0 * a0);
    p[j] = (r_plus[j] - r_minus[j]) / 2.0;
  }
  return {std::move(u), std::move(p)};
}

FirstOrderCorrection first_order_correction(const HydroState& state, const EigenvalueSet& set) {
  FirstOrderCorrection h1{spectral_derivative(state.temperature()), spectral_derivative(state.u())};
  for (double& a : h1.a_temperature) a /= set.lambda11();
  for (double& a : h1.a_velocity) a /= set.lambda02();
  return h1;
}

H1Fluxes h1_fluxes(const HydroState& state, const EigenvalueSet& set) {
  const std::vector<double> du = spectral_derivative(state.u());
  const std::vector<double> dT = spectral_derivative(state.temperature());
  const std::size_t n = state.grid_size();

  H1Fluxes closed{std::vector<double>(n), std::vector<double>(n)};
  for (std::size_t j = 0; j < n; ++j) {
    closed.stress[j] = 4.0 / (3.0 * set.lambda02()) * du[j];
    closed.heat_flux[j] = 5.0 / (2.0 * set.lambda11()) * dT[j];
  }

  // Route through the eigenfunction algebra: <psi, h1> = a_T <psi, psi11> + a_u <psi, psi02>.
  const auto psi02 = psi_poly(EigenfunctionId::Psi02);
  const auto psi11 = psi_poly(EigenfunctionId::Psi11);
  const double g_02_02 = to_double(inner(psi02, psi02));
  const double g_02_11 = to_double(inner(psi02, psi11));
  const double g_11_11 = to_double(inner(psi11, psi11));
  const FirstOrderCorrection h1 = first_order_correction(state, set);

  double scale = 0.0;
  double defect = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const double stress = h1.a_temperature[j] * g_02_11 + h1.a_velocity[j] * g_02_02;
    const double heat = h1.a_temperature[j] * g_11_11 + h1.a_velocity[j] * g_02_11;
    scale = std::max({scale, std::abs(closed.stress[j]), std::abs(closed.heat_flux[j])});
    defect = std::max({defect, std::abs(stress - closed.stress[j]), std::abs(heat - closed.heat_flux[j])});
  }
  if (defect > kFluxRouteTolerance * std::max(1.0, scale)) {
    std::ostringstream os;
    os << "h1 flux routes disagree by " << defect;
    throw ConsistencyError(os.str());
  }
  return closed;
}

double l2_norm(const std::vector<double>& f) {
  double sum = 0.0;
  for (double v : f) sum += v * v;
  return std::sqrt(2.0 * std::numbers::pi / static_cast<double>(f.size()) * sum);
}

double acoustic_energy(const HydroState& state) {
  const double u = l2_norm(state.u());
  const double p = l2_norm(state.p());
  return sound_speed_squared() * u * u + p * p;
}

}  // namespace mshydro
