// Unitary discrete Fourier transforms on the grid's lattice.
//
// Conventions (used by every spectral operation in this project):
//   forward:  zhat(k) = N^{-1/2} sum_x z(x) exp(-i k.x)
//   inverse:  z(x)    = N^{-1/2} sum_k zhat(k) exp(+i k.x)
// so Parseval holds without extra factors and h^dim * sum matches box
// integrals. Grids guarantee power-of-two n; the transform is a plain
// radix-2 Cooley-Tukey applied along each axis, pure and thread-safe.

#pragma once

#include "nlkg/grid.hpp"

namespace nlkg {

ComplexArray fft_forward(const Grid& g, const ComplexArray& x);
ComplexArray fft_inverse(const Grid& g, const ComplexArray& x);
ComplexArray fft_forward(const Grid& g, const RealArray& x);

/// Inverse transform of a conjugate-symmetric spectrum. The imaginary
/// residue must stay below `imag_tol` (roundoff guard) and is dropped.
RealArray fft_inverse_real(const Grid& g, const ComplexArray& x, double imag_tol = 1e-12);

}  // namespace nlkg
