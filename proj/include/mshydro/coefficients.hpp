#pragma once

// Maxwell-molecule eigenvalue table and the transport coefficients of the
// derived hydrodynamic systems. Everything is templated on the scalar so the
// same formulas run in double precision and in exact rationals.
//
// Sign convention: equations are stored as  d/dt (field) = ...  with
// positive diffusivities multiplying d^2/dx^2 and positive dispersion
// coefficients multiplying d^3/dx^3:
//
//   u_t = -p_x           + eps D u_xx + eps^2 beta_u p_xxx
//   p_t = -(5/3) u_x     + eps D p_xx + eps^2 beta_p u_xxx
//   s_t =                  eps E s_xx
//
// with D = sound_diffusivity, E = entropy_diffusivity.

#include <cmath>

#include "mshydro/errors.hpp"
#include "mshydro/velocity_space.hpp"

namespace mshydro {

template <class T>
class BasicEigenvalueSet {
 public:
  explicit BasicEigenvalueSet(T lambda02) : lambda02_(lambda02) {
    if (!(lambda02 < T(0))) throw DomainError("lambda02 must be negative");
  }

  T lambda02() const { return lambda02_; }
  T lambda11() const { return T(2) / T(3) * lambda02_; }
  T lambda03() const { return T(3) / T(2) * lambda02_; }
  T lambda20() const { return T(2) / T(3) * lambda02_; }
  T lambda12() const { return T(7) / T(6) * lambda02_; }

  /// Collision time scale 1 / |lambda02|.
  T mu() const { return T(-1) / lambda02_; }

 private:
  T lambda02_;
};

using EigenvalueSet = BasicEigenvalueSet<double>;
using ExactEigenvalueSet = BasicEigenvalueSet<Rational>;

/// Throws DomainError unless lambda02 < 0.
inline EigenvalueSet eigenvalue_set(double lambda02) { return EigenvalueSet(lambda02); }

/// Square of the dimensionless adiabatic sound speed.
template <class T = double>
T sound_speed_squared() {
  return T(5) / T(3);
}

inline double sound_speed() { return std::sqrt(5.0 / 3.0); }

template <class T>
struct BasicNsCoefficients {
  T sound_diffusivity;
  T entropy_diffusivity;
};

template <class T>
struct BasicBurnettCoefficients {
  T beta_u;
  T beta_p;
};

using NsCoefficients = BasicNsCoefficients<double>;
using BurnettCoefficients = BasicBurnettCoefficients<double>;

template <class T>
BasicNsCoefficients<T> transport_ns(const BasicEigenvalueSet<T>& set) {
  const T l02 = set.lambda02();
  const T l11 = set.lambda11();
  return {-(T(2) / (T(3) * l02) + T(1) / (T(3) * l11)), T(-1) / l11};
}

template <class T>
BasicBurnettCoefficients<T> transport_burnett(const BasicEigenvalueSet<T>& set) {
  const T l02 = set.lambda02();
  const T l11 = set.lambda11();
  return {T(8) / (T(15) * l02 * l02) - T(2) / (T(5) * l02 * l11) + T(1) / (T(10) * l11 * l11),
          T(8) / (T(9) * l02 * l02) - T(2) / (T(3) * l02 * l11) + T(1) / (T(6) * l11 * l11)};
}

/// Coefficient 2/(3 lambda02) - 1/(3 lambda11) of the non-secular forcing that
/// drives the first correction (u~1, p1) through the Euler operator.
template <class T>
T first_correction_forcing(const BasicEigenvalueSet<T>& set) {
  return T(2) / (T(3) * set.lambda02()) - T(1) / (T(3) * set.lambda11());
}

}  // namespace mshydro
