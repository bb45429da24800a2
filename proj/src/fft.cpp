#include "mshydro/fft.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <string>

#include <fftw3.h>

#include "mshydro/errors.hpp"

namespace mshydro {

namespace {

// The FFTW planner is not re-entrant.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

class RealToComplexPlan {
 public:
  explicit RealToComplexPlan(std::size_t n)
      : n_(n),
        in_(fftw_alloc_real(n)),
        out_(fftw_alloc_complex(n / 2 + 1)) {
    std::lock_guard lock(planner_mutex());
    plan_ = fftw_plan_dft_r2c_1d(static_cast<int>(n), in_, out_, FFTW_ESTIMATE);
  }
  ~RealToComplexPlan() {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(plan_);
    fftw_free(in_);
    fftw_free(out_);
  }
  RealToComplexPlan(const RealToComplexPlan&) = delete;
  RealToComplexPlan& operator=(const RealToComplexPlan&) = delete;

  std::vector<Complex> run(std::span<const double> field) {
    std::copy(field.begin(), field.end(), in_);
    fftw_execute(plan_);
    std::vector<Complex> modes(n_);
    const double scale = 1.0 / static_cast<double>(n_);
    for (std::size_t j = 0; j <= n_ / 2; ++j) {
      const Complex c(out_[j][0] * scale, out_[j][1] * scale);
      if (j == n_ / 2) {
        modes[j] = Complex(c.real(), 0.0);
      } else {
        modes[j] = c;
        if (j != 0) modes[n_ - j] = std::conj(c);
      }
    }
    return modes;
  }

 private:
  std::size_t n_;
  double* in_;
  fftw_complex* out_;
  fftw_plan plan_;
};

class ComplexToRealPlan {
 public:
  explicit ComplexToRealPlan(std::size_t n)
      : n_(n),
        in_(fftw_alloc_complex(n / 2 + 1)),
        out_(fftw_alloc_real(n)) {
    std::lock_guard lock(planner_mutex());
    plan_ = fftw_plan_dft_c2r_1d(static_cast<int>(n), in_, out_, FFTW_ESTIMATE);
  }
  ~ComplexToRealPlan() {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(plan_);
    fftw_free(in_);
    fftw_free(out_);
  }
  ComplexToRealPlan(const ComplexToRealPlan&) = delete;
  ComplexToRealPlan& operator=(const ComplexToRealPlan&) = delete;

  std::vector<double> run(std::span<const Complex> modes) {
    for (std::size_t j = 0; j <= n_ / 2; ++j) {
      in_[j][0] = modes[j].real();
      in_[j][1] = (j == 0 || j == n_ / 2) ? 0.0 : modes[j].imag();
    }
    fftw_execute(plan_);
    return std::vector<double>(out_, out_ + n_);
  }

 private:
  std::size_t n_;
  fftw_complex* in_;
  double* out_;
  fftw_plan plan_;
};

}  // namespace

void check_grid_size(std::size_t n) {
  if (n < 4 || n % 2 != 0) throw DomainError("grid size must be even and >= 4, got " + std::to_string(n));
}

std::vector<Complex> forward_dft(std::span<const double> field) {
  check_grid_size(field.size());
  RealToComplexPlan plan(field.size());
  return plan.run(field);
}

double hermitian_defect(std::span<const Complex> modes) {
  const std::size_t n = modes.size();
  double scale = 0.0;
  for (const auto& c : modes) scale = std::max(scale, std::abs(c));
  if (scale == 0.0) return 0.0;
  double defect = std::abs(modes[0].imag());
  defect = std::max(defect, std::abs(modes[n / 2].imag()));
  for (std::size_t j = 1; j < n / 2; ++j) defect = std::max(defect, std::abs(modes[n - j] - std::conj(modes[j])));
  return defect / scale;
}

std::vector<double> inverse_dft(std::span<const Complex> modes) {
  check_grid_size(modes.size());
  const double defect = hermitian_defect(modes);
  if (defect > 1e-12)
    throw DomainError("spectrum violates Hermitian symmetry (relative defect " + std::to_string(defect) + ")");
  ComplexToRealPlan plan(modes.size());
  return plan.run(modes);
}

std::vector<double> spectral_derivative(std::span<const double> field) {
  auto modes = forward_dft(field);
  const std::size_t n = modes.size();
  for (std::size_t j = 0; j < n; ++j) {
    const int m = wavenumber_of(j, n);
    modes[j] = (j == n / 2) ? Complex(0.0) : Complex(0.0, m) * modes[j];
  }
  return inverse_dft(modes);
}

}  // namespace mshydro
