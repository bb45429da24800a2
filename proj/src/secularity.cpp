#include "mshydro/secularity.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "mshydro/errors.hpp"

namespace mshydro {

namespace {

struct SingleMode {
  int mode;
  double amplitude;  // acoustic amplitude in velocity units
};

SingleMode single_mode(const IcSpec& ic) {
  if (ic.terms.empty()) throw UnsupportedInputError("empty initial condition");
  const int mode = ic.terms.front().mode;
  for (const auto& t : ic.terms)
    if (t.mode != mode) throw UnsupportedInputError("secularity experiments need a single-mode initial condition");

  std::size_t n = 16;
  while (n / 2 <= static_cast<std::size_t>(mode)) n *= 2;
  const double energy = acoustic_energy(make_state(ic, n));
  // u = U sin(kx) has (5/3)||u||^2 = (5/3) pi U^2.
  const double amplitude = std::sqrt(energy / (sound_speed_squared() * std::numbers::pi));
  if (!(amplitude > 0.0)) throw UnsupportedInputError("initial condition carries no acoustic (u, p) content");
  return {mode, amplitude};
}

void check_eps(double eps) {
  if (!(eps >= 0.0)) throw DomainError("eps must be nonnegative");
}

double validity_horizon(double eps) { return eps > 0.0 ? 1.0 / (eps * eps) : INFINITY; }

// eps * ||(u1, p1)||_E / ||(u0, p0)||_E for the multiscale expansion at the
// zeroth-order spectrum `zeroth`.
double multiscale_ratio_at(const SpectralState& zeroth, double eps, const EigenvalueSet& set) {
  if (eps == 0.0) return 0.0;
  const std::size_t n = zeroth.grid_size();
  const int half = static_cast<int>(n / 2);
  const double a0 = sound_speed();
  const double g = first_correction_forcing(set);
  const Complex i(0.0, 1.0);

  std::vector<Complex> u1(n), p1(n), zero(n);
  for (int m = 1; m < half; ++m) {
    const double k = -static_cast<double>(m);
    const std::size_t j = index_of(m, n);
    const Complex u0 = zeroth.modes(HydroField::U)[j];
    const Complex p0 = zeroth.modes(HydroField::P)[j];
    const Complex s0 = zeroth.modes(HydroField::S)[j];
    const Complex r0_plus = a0 * u0 + p0;
    const Complex r0_minus = a0 * u0 - p0;
    // Each Riemann component of the correction is driven by the counter-
    // propagating zeroth-order wave: off resonance by 2 a0 k, hence bounded.
    const Complex r1_plus = g * k * k * r0_minus / (-2.0 * i * a0 * k);
    const Complex r1_minus = g * k * k * r0_plus / (2.0 * i * a0 * k);
    const Complex u1_tilde = (r1_plus + r1_minus) / (2.0 * a0);
    // u1 = u~1 - 2/(5 lambda11) ds0/dx
    u1[j] = u1_tilde - 2.0 / (5.0 * set.lambda11()) * (-i * k) * s0;
    p1[j] = (r1_plus - r1_minus) / 2.0;
    u1[index_of(-m, n)] = std::conj(u1[j]);
    p1[index_of(-m, n)] = std::conj(p1[j]);
  }
  const HydroState correction(inverse_dft(u1), inverse_dft(p1), std::vector<double>(n));
  const double base = acoustic_energy(from_modes(zeroth));
  if (!(base > 0.0)) throw ConsistencyError("zeroth-order acoustic energy underflowed; shorten the time range");
  return eps * std::sqrt(acoustic_energy(correction) / base);
}

}  // namespace

double resonant_envelope(double forcing, double omega, double t) {
  if (!(omega > 0.0)) throw DomainError("omega must be positive");
  return std::abs(forcing) * t / (2.0 * omega);
}

double naive_correction_envelope(const IcSpec& ic, double eps, const EigenvalueSet& set, double t) {
  check_eps(eps);
  const SingleMode wave = single_mode(ic);
  const double a0 = sound_speed();
  const double k = wave.mode;
  const double c = 4.0 / (3.0 * set.lambda02()) + 2.0 / (3.0 * set.lambda11());
  const double forcing = c * k * k * a0 * k * wave.amplitude;
  return eps * resonant_envelope(forcing, a0 * k, t);
}

SecularSeries secular_ratio_series(const IcSpec& ic, double eps, const EigenvalueSet& set,
                                   std::span<const double> times, std::size_t grid_size) {
  check_eps(eps);
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (!(times[i] >= 0.0)) throw DomainError("times must be nonnegative");
    if (i > 0 && !(times[i] > times[i - 1])) throw DomainError("times must be strictly ascending");
  }
  if (!times.empty() && times.back() > validity_horizon(eps) * (1.0 + 1e-12))
    throw DomainError("times extend beyond the validity horizon eps^-2");

  const SingleMode wave = single_mode(ic);
  if (static_cast<std::size_t>(wave.mode) >= grid_size / 2) throw DomainError("mode not resolved on grid");
  const SpectralState initial = to_modes(make_state(ic, grid_size));

  SecularSeries series;
  series.times.assign(times.begin(), times.end());
  for (double t : times) {
    series.naive_ratio.push_back(naive_correction_envelope(ic, eps, set, t) / wave.amplitude);
    const SpectralState zeroth = t > 0.0 ? evolve(initial, ModelId::Burnett, eps, set, t) : initial;
    series.multiscale_ratio.push_back(multiscale_ratio_at(zeroth, eps, set));
  }
  return series;
}

MultiscaleBound multiscale_bound(const IcSpec& ic, double eps, const EigenvalueSet& set, double tmax,
                                 std::size_t samples, std::size_t grid_size) {
  check_eps(eps);
  if (!(tmax > 0.0)) throw DomainError("tmax must be positive");
  if (samples < 2) throw DomainError("need at least two samples");
  const bool beyond = tmax > validity_horizon(eps);

  const SingleMode wave = single_mode(ic);
  if (static_cast<std::size_t>(wave.mode) >= grid_size / 2) throw DomainError("mode not resolved on grid");
  const SpectralState initial = to_modes(make_state(ic, grid_size));

  double bound = 0.0;
  for (std::size_t i = 0; i < samples; ++i) {
    const double t = tmax * static_cast<double>(i) / static_cast<double>(samples - 1);
    const SpectralState zeroth = t > 0.0 ? evolve(initial, ModelId::Burnett, eps, set, t) : initial;
    bound = std::max(bound, multiscale_ratio_at(zeroth, eps, set));
  }
  return {bound, beyond};
}

double crossing_time(std::span<const double> times, std::span<const double> values, double level) {
  if (times.size() != values.size()) throw DomainError("times and values differ in length");
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (values[i] >= level) {
      if (i == 0) return times[0];
      const double w = (level - values[i - 1]) / (values[i] - values[i - 1]);
      return times[i - 1] + w * (times[i] - times[i - 1]);
    }
  }
  return -1.0;
}

}  // namespace mshydro
