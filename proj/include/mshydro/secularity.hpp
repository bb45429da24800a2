#pragma once

// Secular growth of the first correction in the single-time (naive) expansion
// versus the bounded first correction of the multiscale expansion, for a
// single-mode acoustic initial condition.
//
// Both ratios compare the first correction with the zeroth order in the
// acoustic energy norm sqrt((5/3)||u||^2 + ||p||^2), which stays nonzero
// through the nodes of a standing wave.

#include <cstddef>
#include <span>
#include <vector>

#include "mshydro/coefficients.hpp"
#include "mshydro/initial_condition.hpp"

namespace mshydro {

/// Envelope |F| t / (2 omega) of the resonant particular solution of
/// y'' + omega^2 y = F cos(omega t)  (or F sin(omega t)).
double resonant_envelope(double forcing, double omega, double t);

/// Amplitude of eps*u1 in the naive expansion: the first correction is driven
/// resonantly by the dissipative terms that the multiscale expansion absorbs
/// into the slow time, giving  eps |F| t / (2 a0 k)  with
/// F = (4/(3 lambda02) + 2/(3 lambda11)) k^2 * a0 k * U  and U the acoustic
/// amplitude of the initial wave in velocity units.
/// Throws UnsupportedInputError unless ic is a single mode with u or p content.
double naive_correction_envelope(const IcSpec& ic, double eps, const EigenvalueSet& set, double t);

struct SecularSeries {
  std::vector<double> times;
  std::vector<double> naive_ratio;
  std::vector<double> multiscale_ratio;
};

/// naive_ratio: eps ||u1|| / ||u0|| for the naive expansion against the
/// undamped Euler wave. multiscale_ratio: the same with u0 evolved under the
/// Burnett model and u1 the bounded (non-resonant) particular solution forced
/// by (2/(3 lambda02) - 1/(3 lambda11)) d^2/dx^2 of the zeroth order.
/// Requires ascending nonnegative times with max(times) <= eps^-2.
SecularSeries secular_ratio_series(const IcSpec& ic, double eps, const EigenvalueSet& set,
                                   std::span<const double> times, std::size_t grid_size = 64);

struct MultiscaleBound {
  double bound;
  bool beyond_validity;  // tmax > eps^-2
};

/// sup of multiscale_ratio over `samples` equally spaced times in [0, tmax].
MultiscaleBound multiscale_bound(const IcSpec& ic, double eps, const EigenvalueSet& set, double tmax,
                                 std::size_t samples = 1001, std::size_t grid_size = 64);

/// First time the series crosses `level`, linearly interpolated; negative if never.
double crossing_time(std::span<const double> times, std::span<const double> values, double level);

}  // namespace mshydro
