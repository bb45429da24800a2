#include "mshydro/selftest.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <ostream>
#include <sstream>

#include "mshydro/coefficients.hpp"
#include "mshydro/dispersion.hpp"
#include "mshydro/fft.hpp"
#include "mshydro/hydro_spectral.hpp"
#include "mshydro/initial_condition.hpp"
#include "mshydro/moment_reference.hpp"
#include "mshydro/secularity.hpp"
#include "mshydro/velocity_space.hpp"

namespace mshydro {

namespace {

using Check = std::function<std::pair<bool, std::string>()>;

std::string num(double v) {
  std::ostringstream os;
  os.precision(3);
  os << v;
  return os.str();
}

std::pair<bool, std::string> within(double err, double tol) { return {err <= tol, "err " + num(err) + " tol " + num(tol)}; }

double max_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

double state_diff(const HydroState& a, const HydroState& b) {
  return std::max({max_diff(a.u(), b.u()), max_diff(a.p(), b.p()), max_diff(a.s(), b.s())});
}

}  // namespace

std::vector<CheckResult> run_selftest() {
  const EigenvalueSet set(-1.0);
  const ExactEigenvalueSet exact(Rational(-1));
  const HydroState wave = make_state(parse_initial_condition("u:1:1,p:2:0.5:0.3,s:3:0.2", 32), 32);

  const std::vector<std::tuple<std::string, std::string, Check>> checks = {
      {"velocity_space", "eigenfunctions mutually orthogonal",
       [] {
         using E = EigenfunctionId;
         const E ids[] = {E::Psi02, E::Psi11, E::Psi03, E::Psi20, E::Psi12, E::One, E::Cx};
         for (E a : ids)
           for (E b : ids)
             if (a != b && inner(psi_poly(a), psi_poly(b)) != 0)
               return std::pair{false, std::string(to_string(a)) + " . " + to_string(b) + " != 0"};
         return std::pair{true, std::string("7 functions")};
       }},
      {"velocity_space", "norms 4/3 5/2 15/2",
       [] {
         using E = EigenfunctionId;
         const bool ok = inner(psi_poly(E::Psi02), psi_poly(E::Psi02)) == Rational(4) / 3 &&
                         inner(psi_poly(E::Psi11), psi_poly(E::Psi11)) == Rational(5) / 2 &&
                         inner(psi_poly(E::Psi20), psi_poly(E::Psi20)) == Rational(15) / 2;
         return std::pair{ok, std::string("exact")};
       }},
      {"velocity_space", "recursion relations vanish",
       [] {
         const bool ok = recursion_residual(Recursion::Stress).is_zero() && recursion_residual(Recursion::Heat).is_zero();
         return std::pair{ok, std::string("exact")};
       }},
      {"coefficients", "D = 7/6, E = 3/2 at lambda02 = -1",
       [&] {
         const auto ns = transport_ns(exact);
         return std::pair{ns.sound_diffusivity == Rational(7) / 6 && ns.entropy_diffusivity == Rational(3) / 2,
                          "D " + to_string(ns.sound_diffusivity) + " E " + to_string(ns.entropy_diffusivity)};
       }},
      {"coefficients", "a0^2 beta_u = beta_p",
       [&] {
         const auto b = transport_burnett(exact);
         return std::pair{sound_speed_squared<Rational>() * b.beta_u == b.beta_p,
                          "beta_u " + to_string(b.beta_u) + " beta_p " + to_string(b.beta_p)};
       }},
      {"dispersion", "burnett eigenvalues match closed form",
       [&] {
         const auto ev = symbol_eigenvalues(ModelId::Burnett, 1.0, 0.1, set);
         double err = 0.0;
         for (Branch b : {Branch::SoundPlus, Branch::SoundMinus, Branch::Entropy}) {
           const auto target = sigma_asymptotic(1.0, 0.1, set, b);
           double best = INFINITY;
           for (Eigen::Index i = 0; i < ev.size(); ++i) best = std::min(best, std::abs(ev[i] - target));
           err = std::max(err, best);
         }
         return within(err, 1e-12);
       }},
      {"fft", "round trip",
       [&] {
         return within(max_diff(inverse_dft(forward_dft(wave.u())), wave.u()), 1e-13);
       }},
      {"fft", "spectral derivative of sin 3x",
       [] {
         std::vector<double> f(32), df(32);
         for (std::size_t j = 0; j < 32; ++j) {
           const double x = 2.0 * std::numbers::pi * j / 32.0;
           f[j] = std::sin(3 * x);
           df[j] = 3 * std::cos(3 * x);
         }
         return within(max_diff(spectral_derivative(f), df), 1e-12);
       }},
      {"hydro_spectral", "euler conserves acoustic energy",
       [&] {
         const double e0 = acoustic_energy(wave);
         return within(std::abs(acoustic_energy(evolve(wave, ModelId::Euler, 0.1, set, 7.3)) - e0) / e0, 1e-12);
       }},
      {"hydro_spectral", "semigroup property (burnett)",
       [&] {
         const auto a = evolve(evolve(wave, ModelId::Burnett, 0.1, set, 0.4), ModelId::Burnett, 0.1, set, 0.6);
         return within(state_diff(a, evolve(wave, ModelId::Burnett, 0.1, set, 1.0)), 1e-12);
       }},
      {"hydro_spectral", "riemann model agrees with burnett",
       [&] {
         const auto a = evolve(wave, ModelId::RiemannDecoupled, 0.1, set, 1.0);
         const auto b = evolve(wave, ModelId::Burnett, 0.1, set, 1.0);
         // a0^2 beta_u = beta_p makes the Riemann basis diagonalize Burnett exactly.
         return within(state_diff(a, b), 1e-12);
       }},
      {"hydro_spectral", "first-order fluxes agree",
       [&] {
         const auto f = h1_fluxes(wave, set);
         return std::pair{f.stress.size() == wave.grid_size(), std::string("closed form vs inner products")};
       }},
      {"moment_reference", "closure recovers NS coefficients",
       [&] {
         const auto c = ns_closure_from_symbol(1.0, 0.1, set);
         return within(std::max(std::abs(c.viscosity - 4.0 / (3.0 * set.lambda02())),
                                 std::abs(c.conduction - 5.0 / (3.0 * set.lambda11()))),
                       1e-12);
       }},
      {"moment_reference", "mass conserved",
       [&] {
         const auto m = evolve_moments(MomentState::from_hydro(wave, 0.1, set), 2.0);
         return within(std::abs(m.mode(MomentField::N, 0) - MomentState::from_hydro(wave, 0.1, set).mode(MomentField::N, 0)),
                       1e-14);
       }},
      {"secularity", "resonant envelope",
       [] { return within(std::abs(resonant_envelope(1.0, 1.0, 10.0) - 5.0), 1e-15); }},
      {"secularity", "multiscale correction bounded",
       [&] {
         const auto ic = parse_initial_condition("u:1:1");
         const auto early = multiscale_bound(ic, 0.1, set, 10.0, 201);
         const auto late = multiscale_bound(ic, 0.1, set, 100.0, 2001);
         return std::pair{late.bound <= 2.0 * early.bound,
                          "max " + num(late.bound) + " vs early " + num(early.bound)};
       }},
  };

  std::vector<CheckResult> results;
  for (const auto& [module, name, check] : checks) {
    try {
      auto [ok, detail] = check();
      results.push_back({module, name, ok, detail});
    } catch (const std::exception& e) {
      results.push_back({module, name, false, std::string("threw: ") + e.what()});
    }
  }
  return results;
}

bool report_selftest(const std::vector<CheckResult>& results, std::ostream& out) {
  bool all = true;
  for (const auto& r : results) {
    all = all && r.passed;
    out << (r.passed ? "PASS " : "FAIL ") << r.module << ": " << r.name << " (" << r.detail << ")\n";
  }
  out << (all ? "all checks passed" : "some checks failed") << '\n';
  return all;
}

}  // namespace mshydro
