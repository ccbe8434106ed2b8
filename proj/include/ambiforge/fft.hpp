#pragma once

#include <vector>

#include "ambiforge/common.hpp"

namespace ambiforge::fft {

/// True for sizes of the form 2^a * 3^b (n >= 1).
bool supported_size(size_t n);

/// Smallest supported size >= n.
size_t next_supported(size_t n);

/// In-place complex DFT. inverse=true applies the 1/n scale.
void transform(std::vector<cplx>& x, bool inverse);

/// Real-input forward transform, one-sided (n/2 + 1 bins). n must be even.
std::vector<cplx> rfft(const double* x, size_t n);
std::vector<cplx> rfft(const std::vector<double>& x);

/// Inverse of rfft: n real samples from n/2 + 1 bins. Imaginary parts of the
/// DC and Nyquist bins are ignored.
std::vector<double> irfft(const cplx* bins, size_t n);
std::vector<double> irfft(const std::vector<cplx>& bins, size_t n);

/// Linear convolution of two real signals via zero-padded FFT.
std::vector<double> convolve(const std::vector<double>& a, const std::vector<double>& b);

}  // namespace ambiforge::fft
