#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "mshydro/errors.hpp"
#include "mshydro/fft.hpp"
#include "mshydro/hydro_spectral.hpp"
#include "mshydro/initial_condition.hpp"
#include "mshydro/matrix_exponential.hpp"

using namespace mshydro;

namespace {

std::vector<double> random_field(std::mt19937& rng, std::size_t n) {
  std::normal_distribution<double> g;
  std::vector<double> f(n);
  for (auto& v : f) v = g(rng);
  return f;
}

HydroState random_state(std::mt19937& rng, std::size_t n) {
  return HydroState(random_field(rng, n), random_field(rng, n), random_field(rng, n));
}

double max_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

double mean(const std::vector<double>& f) {
  double s = 0.0;
  for (double v : f) s += v;
  return s / static_cast<double>(f.size());
}

}  // namespace

TEST_CASE("grid validation") {
  CHECK_THROWS_AS(check_grid_size(7), DomainError);
  CHECK_THROWS_AS(check_grid_size(2), DomainError);
  CHECK_NOTHROW(check_grid_size(12));
  CHECK_THROWS_AS(HydroState({1, 2, 3, 4}, {1, 2, 3}, {1, 2, 3, 4}), DomainError);
}

TEST_CASE("DFT conventions") {
  const std::size_t n = 16;
  std::vector<double> f(n);
  for (std::size_t j = 0; j < n; ++j) f[j] = std::cos(3.0 * 2.0 * std::numbers::pi * j / n);
  const auto m = forward_dft(f);
  CHECK(std::abs(m[index_of(3, n)] - Complex(0.5, 0.0)) < 1e-15);
  CHECK(std::abs(m[index_of(-3, n)] - Complex(0.5, 0.0)) < 1e-15);
  CHECK(wavenumber_of(15, n) == -1);
  CHECK(index_of(-8, n) == 8);
}

TEST_CASE("random round trips and hermitian spectra") {
  std::mt19937 rng(12345);
  for (std::size_t n : {8u, 16u, 64u, 256u}) {
    for (int trial = 0; trial < 5; ++trial) {
      const auto f = random_field(rng, n);
      const auto modes = forward_dft(f);
      CHECK(hermitian_defect(modes) < 1e-14);
      CHECK(max_diff(inverse_dft(modes), f) < 1e-12);
    }
  }
}

TEST_CASE("non-hermitian spectra are rejected") {
  std::vector<Complex> modes(8, Complex(0.0, 0.0));
  modes[1] = Complex(1.0, 0.0);
  CHECK_THROWS_AS(inverse_dft(modes), DomainError);
}

TEST_CASE("matrix exponential: eigen path and defective fallback agree with closed forms") {
  Eigen::MatrixXcd rot(2, 2);
  rot << 0.0, 1.0, -1.0, 0.0;
  const auto e = matrix_exponential(rot, 0.7);
  CHECK(std::abs(e(0, 0) - std::cos(0.7)) < 1e-14);
  CHECK(std::abs(e(0, 1) - std::sin(0.7)) < 1e-14);
  CHECK_FALSE(last_exponential_used_fallback());

  Eigen::MatrixXcd jordan(2, 2);
  jordan << -1.0, 1.0, 0.0, -1.0;
  const auto j = matrix_exponential(jordan, 2.0);
  CHECK(last_exponential_used_fallback());
  CHECK(std::abs(j(0, 0) - std::exp(-2.0)) < 1e-14);
  CHECK(std::abs(j(0, 1) - 2.0 * std::exp(-2.0)) < 1e-14);
}

TEST_CASE("evolution is a semigroup for every hydrodynamic model") {
  std::mt19937 rng(7);
  const EigenvalueSet set(-1.0);
  const auto s0 = random_state(rng, 32);
  for (ModelId m : {ModelId::Euler, ModelId::NavierStokes, ModelId::Burnett, ModelId::RiemannDecoupled}) {
    const auto two = evolve(evolve(s0, m, 0.1, set, 0.3), m, 0.1, set, 0.45);
    const auto one = evolve(s0, m, 0.1, set, 0.75);
    CHECK(max_diff(two.u(), one.u()) < 1e-11);
    CHECK(max_diff(two.p(), one.p()) < 1e-11);
    CHECK(max_diff(two.s(), one.s()) < 1e-11);
    CHECK(one.time() == doctest::Approx(0.75));
  }
}

TEST_CASE("means are conserved and dissipative energy is monotone") {
  std::mt19937 rng(99);
  const EigenvalueSet set(-1.0);
  const auto s0 = random_state(rng, 64);
  for (ModelId m : {ModelId::Euler, ModelId::NavierStokes, ModelId::Burnett, ModelId::RiemannDecoupled}) {
    double prev = acoustic_energy(s0);
    for (int i = 1; i <= 20; ++i) {
      const auto s = evolve(s0, m, 0.1, set, 0.25 * i);
      CHECK(std::abs(mean(s.u()) - mean(s0.u())) < 1e-14);
      CHECK(std::abs(mean(s.p()) - mean(s0.p())) < 1e-14);
      CHECK(std::abs(mean(s.s()) - mean(s0.s())) < 1e-14);
      const double e = acoustic_energy(s);
      if (m != ModelId::Euler) CHECK(e <= prev * (1.0 + 1e-14));
      prev = e;
    }
  }
}

TEST_CASE("euler returns after one acoustic period") {
  const EigenvalueSet set(-1.0);
  const auto s0 = make_state(parse_initial_condition("u:1:1,p:1:0.4:0.2"), 64);
  const double period = 2.0 * std::numbers::pi / sound_speed();
  const auto s1 = evolve(s0, ModelId::Euler, 0.1, set, period);
  CHECK(max_diff(s1.u(), s0.u()) < 1e-10);
  CHECK(max_diff(s1.p(), s0.p()) < 1e-10);
}

TEST_CASE("riemann split and join are inverse") {
  std::mt19937 rng(3);
  const auto u = random_field(rng, 16), p = random_field(rng, 16);
  const auto [rp, rm] = riemann_split(u, p);
  const auto [u2, p2] = riemann_join(rp, rm);
  CHECK(max_diff(u, u2) < 1e-14);
  CHECK(max_diff(p, p2) < 1e-14);
}

TEST_CASE("derived fields") {
  const HydroState s({1, 1, 1, 1}, {2, 2, 2, 2}, {0.5, 0.5, 0.5, 0.5});
  CHECK(s.n()[0] == doctest::Approx((3.0 * 2.0 - 2.0 * 0.5) / 5.0));
  CHECK(s.temperature()[0] == doctest::Approx(s.p()[0] - s.n()[0]));
}

TEST_CASE("h1 fluxes reproduce the first-order transport coefficients") {
  const std::size_t n = 32;
  std::vector<double> sinx(n), zero(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) sinx[j] = std::sin(2.0 * std::numbers::pi * j / n);
  for (double l : {-1.0, -3.0}) {
    const EigenvalueSet set(l);
    // T = p - n = 0.4 (p + s); p = s = 1.25 sin x gives T = sin x.
    std::vector<double> half(n);
    for (std::size_t j = 0; j < n; ++j) half[j] = 1.25 * sinx[j];
    const HydroState state(sinx, half, half);
    const auto f = h1_fluxes(state, set);
    const auto dx = spectral_derivative(sinx);
    for (std::size_t j = 0; j < n; ++j) {
      CHECK(f.stress[j] == doctest::Approx(4.0 / (3.0 * set.lambda02()) * dx[j]).epsilon(1e-12));
      CHECK(f.heat_flux[j] == doctest::Approx(5.0 / (2.0 * set.lambda11()) * dx[j]).epsilon(1e-12));
    }
  }
}
