#pragma once

// Discrete Fourier pair on the periodic grid x_j = 2 pi j / N.
//
//   mode(m) = (1/N) sum_j f(x_j) exp(-i m x_j),   f(x_j) = sum_m mode(m) exp(i m x_j)
//
// Modes are stored in FFT order: index j holds wavenumber m = j for j < N/2
// and m = j - N otherwise, so m ranges over [-N/2, N/2).

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace mshydro {

using Complex = std::complex<double>;

constexpr int wavenumber_of(std::size_t index, std::size_t n) {
  return index < n / 2 ? static_cast<int>(index) : static_cast<int>(index) - static_cast<int>(n);
}

constexpr std::size_t index_of(int m, std::size_t n) {
  return m >= 0 ? static_cast<std::size_t>(m) : static_cast<std::size_t>(m + static_cast<int>(n));
}

/// Throws DomainError unless n is even and at least 4.
void check_grid_size(std::size_t n);

std::vector<Complex> forward_dft(std::span<const double> field);

/// Throws DomainError if the spectrum is not Hermitian (mode(-m) = conj(mode(m)),
/// real mean and Nyquist modes) to within 1e-12 of its largest coefficient.
std::vector<double> inverse_dft(std::span<const Complex> modes);

/// Largest violation of Hermitian symmetry, relative to max |mode|.
double hermitian_defect(std::span<const Complex> modes);

/// Spectral d/dx; the Nyquist mode is dropped.
std::vector<double> spectral_derivative(std::span<const double> field);

}  // namespace mshydro
