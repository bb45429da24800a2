#include "mshydro/moment_reference.hpp"

#include "mshydro/errors.hpp"
#include "mshydro/matrix_exponential.hpp"

namespace mshydro {

namespace {
constexpr int kN = 0, kU = 1, kP = 2, kPi = 3, kQ = 4;
}  // namespace

MomentMatrix moment_symbol(double k, double eps, const EigenvalueSet& set) {
  if (!(eps > 0.0)) throw DomainError("the moment reference needs eps > 0");
  const Complex ik(0.0, k);  // -d/dx
  MomentMatrix m = MomentMatrix::Zero();
  m(kN, kU) = ik;

  m(kU, kP) = ik;
  m(kU, kPi) = ik;

  m(kP, kU) = 5.0 / 3.0 * ik;
  m(kP, kQ) = 2.0 / 3.0 * ik;

  m(kPi, kU) = 4.0 / 3.0 * ik;
  m(kPi, kQ) = 8.0 / 15.0 * ik;
  m(kPi, kPi) = set.lambda02() / eps;

  // q_t = -Pi_x - (5/2)(p - n)_x
  m(kQ, kPi) = ik;
  m(kQ, kP) = 2.5 * ik;
  m(kQ, kN) = -2.5 * ik;
  m(kQ, kQ) = set.lambda11() / eps;
  return m;
}

MomentState::MomentState(std::array<std::vector<Complex>, 5> modes, double eps, EigenvalueSet set, double time)
    : modes_(std::move(modes)), eps_(eps), set_(set), time_(time) {
  if (!(eps > 0.0)) throw DomainError("the moment reference needs eps > 0");
  for (const auto& f : modes_)
    if (f.size() != modes_[0].size()) throw DomainError("moment fields must share one grid");
  check_grid_size(modes_[0].size());
}

MomentState MomentState::from_hydro(const HydroState& state, double eps, const EigenvalueSet& set) {
  const std::size_t n = state.grid_size();
  return MomentState({forward_dft(state.n()), forward_dft(state.u()), forward_dft(state.p()),
                      std::vector<Complex>(n), std::vector<Complex>(n)},
                     eps, set, state.time());
}

Complex MomentState::mode(MomentField f, int m) const {
  const int half = static_cast<int>(grid_size() / 2);
  if (m < -half || m >= half) throw DomainError("wavenumber out of range");
  return modes_[static_cast<int>(f)][index_of(m, grid_size())];
}

MomentState evolve_moments(const MomentState& state, double dt) {
  if (!(dt > 0.0)) throw DomainError("dt must be positive");
  const std::size_t n = state.grid_size();
  const int half = static_cast<int>(n / 2);
  std::array<std::vector<Complex>, 5> out;
  for (auto& f : out) f.assign(n, Complex(0.0));

  for (int m = 0; m <= half; ++m) {
    MomentMatrix symbol = moment_symbol(-static_cast<double>(m), state.eps(), state.eigenvalues());
    const bool self_conjugate = (m == 0 || m == half);
    if (self_conjugate) symbol = symbol.real().cast<Complex>();
    const Eigen::MatrixXcd step = matrix_exponential(symbol, dt);

    const std::size_t j = index_of(m, n);
    Eigen::VectorXcd v(5);
    for (int f = 0; f < 5; ++f) v(f) = state.modes(static_cast<MomentField>(f))[j];
    const Eigen::VectorXcd w = step * v;
    for (int f = 0; f < 5; ++f) {
      out[f][j] = self_conjugate ? Complex(w(f).real(), 0.0) : w(f);
      if (!self_conjugate) out[f][index_of(-m, n)] = std::conj(w(f));
    }
  }
  return MomentState(std::move(out), state.eps(), state.eigenvalues(), state.time() + dt);
}

HydroProjection hydro_projection(const MomentState& state) {
  const auto n = inverse_dft(state.modes(MomentField::N));
  auto u = inverse_dft(state.modes(MomentField::U));
  auto p = inverse_dft(state.modes(MomentField::P));
  std::vector<double> s(n.size());
  for (std::size_t j = 0; j < s.size(); ++j) s[j] = 1.5 * p[j] - 2.5 * n[j];
  return {HydroState(std::move(u), std::move(p), std::move(s), state.time()),
          inverse_dft(state.modes(MomentField::Stress)), inverse_dft(state.modes(MomentField::HeatFlux))};
}

NsClosure ns_closure_from_symbol(double k, double eps, const EigenvalueSet& set) {
  if (k == 0.0) throw DomainError("closure coefficients need k != 0");
  const MomentMatrix m = moment_symbol(k, eps, set);
  // Quasi-steady Pi = -M(Pi,u)/M(Pi,Pi) u feeds back into u_t through M(u,Pi).
  const Complex u_feedback = -m(kU, kPi) * m(kPi, kU) / m(kPi, kPi);
  // q_t = 0 with T = p - n: q = -M(q,p)/M(q,q) T, feeding p_t through M(p,q).
  const Complex p_feedback = -m(kP, kQ) * m(kQ, kP) / m(kQ, kQ);
  // u_t = -eps viscosity u_xx  ->  mode coefficient eps viscosity k^2.
  const double scale = eps * k * k;
  return {u_feedback.real() / scale, p_feedback.real() / scale};
}

}  // namespace mshydro
