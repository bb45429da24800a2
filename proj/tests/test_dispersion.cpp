#include <doctest.h>

#include <cmath>
#include <vector>

#include "mshydro/dispersion.hpp"
#include "mshydro/errors.hpp"

using namespace mshydro;

namespace {

double nearest(const Eigen::VectorXcd& ev, std::complex<double> target) {
  double best = INFINITY;
  for (Eigen::Index i = 0; i < ev.size(); ++i) best = std::min(best, std::abs(ev[i] - target));
  return best;
}

}  // namespace

TEST_CASE("euler symbol is pure propagation") {
  const EigenvalueSet set(-1.0);
  const auto ev = symbol_eigenvalues(ModelId::Euler, 2.0, 0.3, set);
  CHECK(nearest(ev, {0.0, 2.0 * sound_speed()}) < 1e-14);
  CHECK(nearest(ev, {0.0, -2.0 * sound_speed()}) < 1e-14);
  CHECK(nearest(ev, {0.0, 0.0}) < 1e-14);
}

TEST_CASE("navier-stokes eigenvalues are the closed form without dispersion") {
  const EigenvalueSet set(-1.0);
  const double k = 1.5, eps = 0.1;
  const auto ev = symbol_eigenvalues(ModelId::NavierStokes, k, eps, set);
  CHECK(nearest(ev, {-eps * k * k * 7.0 / 6.0, sound_speed() * k}) < 1e-13);
  CHECK(nearest(ev, {-eps * k * k * 1.5, 0.0}) < 1e-13);
}

TEST_CASE("burnett and riemann eigenvalues match the closed form") {
  for (double l : {-1.0, -2.5}) {
    const EigenvalueSet set(l);
    for (double k : {0.5, 1.0, 2.0, 4.0, 8.0})
      for (double eps : {0.05, 0.1, 0.2})
        for (ModelId m : {ModelId::Burnett, ModelId::RiemannDecoupled}) {
          const auto ev = symbol_eigenvalues(m, k, eps, set);
          for (Branch b : {Branch::SoundPlus, Branch::SoundMinus, Branch::Entropy})
            CHECK(nearest(ev, sigma_asymptotic(k, eps, set, b)) <= 1e-12 * std::max(1.0, k * k * k));
        }
  }
}

TEST_CASE("sound_plus is the right-running wave") {
  // exp(sigma t - i k x) with Im sigma = +a0 k moves toward +x.
  const EigenvalueSet set(-1.0);
  CHECK(sigma_asymptotic(1.0, 0.1, set, Branch::SoundPlus).imag() > 0.0);
  CHECK(sigma_asymptotic(1.0, 0.1, set, Branch::Entropy).imag() == 0.0);
}

TEST_CASE("sigma_asymptotic domain") {
  const EigenvalueSet set(-1.0);
  CHECK_THROWS_AS(sigma_asymptotic(0.0, 0.1, set, Branch::SoundPlus), DomainError);
  CHECK_THROWS_AS(sigma_asymptotic(1.0, 0.0, set, Branch::SoundPlus), DomainError);
  CHECK_THROWS_AS(sigma_asymptotic(1.0, 0.1, set, Branch::HeatRelaxation), DomainError);
  CHECK_THROWS_AS(symbol_matrix(ModelId::MomentReference, 1.0, 0.0, set), DomainError);
  CHECK_THROWS_AS(symbol_matrix(ModelId::Burnett, 1.0, -0.1, set), DomainError);
}

TEST_CASE("moment reference converges to the asymptotic relation") {
  const EigenvalueSet set(-1.0);
  std::vector<double> sound, entropy;
  for (double eps : {0.1, 0.05, 0.025, 0.0125}) {
    const auto ev = symbol_eigenvalues(ModelId::MomentReference, 1.0, eps, set);
    sound.push_back(nearest(ev, sigma_asymptotic(1.0, eps, set, Branch::SoundPlus)));
    entropy.push_back(nearest(ev, sigma_asymptotic(1.0, eps, set, Branch::Entropy)));
  }
  for (std::size_t i = 0; i + 1 < sound.size(); ++i) {
    CHECK(sound[i] / sound[i + 1] > 6.5);
    CHECK(sound[i] / sound[i + 1] < 9.5);
    CHECK(std::log2(entropy[i] / entropy[i + 1]) >= 1.8);
  }
}

TEST_CASE("branch tracking keeps labels on a k sweep") {
  const EigenvalueSet set(-1.0);
  std::vector<double> k;
  for (int i = 1; i <= 60; ++i) k.push_back(0.05 * i);
  const auto table = branches(ModelId::MomentReference, k, 0.1, set);
  REQUIRE(table.rows.size() == k.size());
  for (std::size_t i = 0; i < k.size(); ++i) {
    REQUIRE(table.rows[i].size() == 5);
    CHECK(table.sigma(i, Branch::SoundPlus).imag() > 0.0);
    CHECK(table.sigma(i, Branch::SoundMinus).imag() < 0.0);
    CHECK(std::abs(table.sigma(i, Branch::Entropy).imag()) < 1e-10);
    CHECK(table.sigma(i, Branch::ShearRelaxation).real() < -5.0);
  }
  // Labels follow continuously: the sound frequency is monotone in k.
  for (std::size_t i = 1; i < k.size(); ++i)
    CHECK(table.sigma(i, Branch::SoundPlus).imag() > table.sigma(i - 1, Branch::SoundPlus).imag());
}

TEST_CASE("branch tables sort entries by branch") {
  const EigenvalueSet set(-1.0);
  const std::vector<double> k{0.5, 1.0};
  const auto t = branches(ModelId::Burnett, k, 0.1, set);
  const auto labels = model_branches(ModelId::Burnett);
  for (const auto& row : t.rows)
    for (std::size_t j = 0; j < row.size(); ++j) CHECK(row[j].branch == labels[j]);
}

TEST_CASE("indistinguishable branches raise BranchCollisionError") {
  const EigenvalueSet set(-1.0);
  // Past eps k ~ 0.3 the entropy and shear-relaxation roots of the moment system
  // form a complex-conjugate pair; no continuation can tell the two apart.
  std::vector<double> sweep;
  for (int i = 1; i <= 40; ++i) sweep.push_back(0.1 * i);
  CHECK_THROWS_AS(branches(ModelId::MomentReference, sweep, 0.1, set), BranchCollisionError);
  sweep.resize(29);
  CHECK_NOTHROW(branches(ModelId::MomentReference, sweep, 0.1, set));
  const std::vector<double> k{1e-15, 2e-15};
  CHECK_THROWS_AS(branches(ModelId::Euler, k, 0.1, set), BranchCollisionError);
}
