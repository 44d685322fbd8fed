#pragma once

#include <complex>
#include <span>
#include <vector>

namespace vvl {

using cplx = std::complex<double>;

/// Forward DFT of a real row: modes[m] = (1/n) sum_k f_k e^{-2 pi i m k / n},
/// m = 0..n-1. Direct summation; periodic axes here are small.
std::vector<cplx> dft_forward(std::span<const double> values);

/// Inverse of dft_forward, real part of the reconstruction.
void dft_inverse(std::span<const cplx> modes, std::span<double> out);

/// Signed wavenumber index for mode slot m of an n-point DFT: m for m <= n/2,
/// m - n otherwise. The Nyquist slot maps to +n/2.
int signed_wavenumber(std::size_t m, std::size_t n);

/// Multiplies modes in place by the translation phase e^{-i k_m (2 pi / L) s}.
/// The Nyquist mode is shifted with cos so a real field stays real.
void apply_shift_phase(std::span<cplx> modes, double period, double shift);

/// Evaluates the trigonometric interpolant at an arbitrary coordinate.
double dft_eval(std::span<const cplx> modes, double period, double x);

/// Writes out[m] = e^{-i k_m angle} (Nyquist slot gets cos, keeping real
/// fields real) via an incremental phase recurrence. n must be even, >= 4.
void fill_rotation(std::span<cplx> out, double angle);

/// Multiplies mode-major storage modes[m][j] by e^{-i k_m angle} for one
/// row j, with the same conventions and recurrence.
void rotate_row(std::vector<std::vector<cplx>>& modes, std::size_t j, double angle);

}  // namespace vvl
