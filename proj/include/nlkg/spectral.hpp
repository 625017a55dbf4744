// Fourier-multiplier operators, Sobolev inner products, and the complex
// structure of the field phase space:
//
//   R(phi, pi) = phi + i mu^{-1} pi,   mu = (-Laplace + m^2)^{1/2},
//   J = R^{-1} i R = [[0, -mu^{-1}], [mu, 0]],
//
// together with the reflections Theta^T (phi,pi) -> (phi,-pi) and
// Theta^P (x -> -x) and lattice translations.
//
// H^s inner products use the weight (m^2+|k|^2)^s and carry the physical
// volume factor h^dim, so they approximate box integrals:
//   <z1,z2>_s = h^dim sum_k conj(z1hat(k)) (m^2+|k|^2)^s z2hat(k),
// antilinear in the first slot.

#pragma once

#include "nlkg/fft.hpp"
#include "nlkg/grid.hpp"

namespace nlkg {

/// Multiply the spectrum by (m^2+|k|^2)^(s/2). Real fields stay real
/// (the symbol is real and even); the roundoff imaginary residue is
/// asserted small and dropped.
RealField apply_mu_power(const RealField& f, double s);
ComplexProfile apply_mu_power(const ComplexProfile& f, double s);

/// <z1, z2>_{H^s}, antilinear in z1; conjugate symmetric.
Complex sobolev_inner(const ComplexProfile& z1, const ComplexProfile& z2, double s);
double sobolev_norm(const ComplexProfile& z, double s);

/// L2 pairing h^dim sum_x f g of real fields.
double l2_inner(const RealField& f, const RealField& g);
double l2_norm(const RealField& f);

/// Graph norm of Cauchy data: (|phi|_{H^1}^2 + |pi|_{L2}^2)^{1/2}.
/// Equals the H^1 norm of map_R(d).
double graph_norm(const PhaseSpacePoint& d);

ComplexProfile map_R(const PhaseSpacePoint& d);
PhaseSpacePoint map_R_inv(const ComplexProfile& z);

/// J = R^{-1} i R: (phi, pi) -> (-mu^{-1} pi, mu phi). Squares to -1.
PhaseSpacePoint apply_J(const PhaseSpacePoint& d);

PhaseSpacePoint time_reflect(const PhaseSpacePoint& d);     // (phi, -pi)
PhaseSpacePoint space_reflect(const PhaseSpacePoint& d);    // x -> -x (mod L)
ComplexProfile space_reflect(const ComplexProfile& z);

/// Pointwise complex conjugation of position-space samples
/// (equivalently zhat(k) -> conj(zhat(-k))).
ComplexProfile conj_profile(const ComplexProfile& z);

/// Shift by an integer number of lattice sites per axis (exact permutation).
ComplexProfile translate(const ComplexProfile& z, const std::array<int, 3>& shift_sites);
RealField translate(const RealField& f, const std::array<int, 3>& shift_sites);
PhaseSpacePoint translate(const PhaseSpacePoint& d, const std::array<int, 3>& shift_sites);

/// Difference norms used all over the test surface.
double graph_distance(const PhaseSpacePoint& a, const PhaseSpacePoint& b);
double sobolev_distance(const ComplexProfile& a, const ComplexProfile& b, double s);

ComplexProfile to_profile(const RealField& f);

}  // namespace nlkg
