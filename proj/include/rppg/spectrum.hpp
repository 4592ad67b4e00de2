#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace rppg::spectrum {

// Forward real-to-complex FFT; returns bins 0..n/2 (inclusive).
std::vector<std::complex<double>> rfft(std::span<const double> x);

// Inverse of rfft for an original length n; includes the 1/n scaling.
std::vector<double> irfft(std::span<const std::complex<double>> bins, std::size_t n);

// |X_k|^2 for k = 0..n/2.
std::vector<double> power_spectrum(std::span<const double> x);

std::vector<double> hann_window(std::size_t n);

inline double bin_hz(std::size_t k, std::size_t n, double fps) {
  return static_cast<double>(k) * fps / static_cast<double>(n);
}

}  // namespace rppg::spectrum
