// One-particle kinematics: the relativistic coordinate q, the ladder
// operators b_j, b*_j, the hyperboloid Hermite basis e_k, the position-space
// basis phi_k, and coherent-vector overlaps.
//
// The one-particle space H_1 carries the mass-shell measure: in momentum
// space (psi1, psi2) = sum_p conj(F1(p)) F2(p) hp^dim / mu(p), realized on
// the grid's dual lattice. Basis elements are stored in the plain-Fourier
// x-representation, where they are real-valued and the raising operator is
//
//   b*_j = 2^{-1/2} ( mu^{1/2} x_j mu^{-1/2} - d/dx_j ),
//
// with x_j the centered coordinate. The coordinate operator uses the
// sandwich order q = mu^{1/2} x_j mu^{-1/2} (in this representation), the
// order that annihilates e_0: mu^{-1/2} e_0 is the plain Gaussian.
//
// Momentum samples F(p) and the x-representation g(x) are tied by
//   g = (2 pi)^{-dim/2} hp^dim sum_p F(p) exp(i p x),
// so the H_1 pairing coincides with the H^{-1/2} inner product of the
// x-representations (the paper's indexing of the one-particle space).

#pragma once

#include "nlkg/grid.hpp"

#include <array>
#include <optional>

namespace nlkg {

inline constexpr int kDegreeCapPerAxis = 6;

struct MultiIndex {
  std::array<int, 3> k{0, 0, 0};

  int degree() const { return k[0] + k[1] + k[2]; }
  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
  friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;
};

struct BasisElement {
  MultiIndex index;
  ComplexProfile xspace;  // real-valued samples (complex storage)
};

/// e^{-p^2/2} at the dual-lattice edge must undershoot 1e-14 for the Hermite
/// profiles to be resolved. The `basis` CLI enforces this; library calls
/// only consult it.
bool gaussian_guard_ok(const Grid& g);

/// Momentum samples F(p) of a basis element (DFT-ordered dual lattice).
ComplexArray mass_shell_samples(const BasisElement& e);

/// Mass-shell inner product sum_p conj(F1) F2 hp^dim / mu(p).
Complex shell_inner(const BasisElement& a, const BasisElement& b);
double shell_norm(const BasisElement& e);

/// Ground profile e_0(p) = pi^{-dim/4} mu(p)^{1/2} exp(-p^2/2); annihilated
/// by every b_j up to discretization error, unit H_1 norm up to the
/// exponentially small lattice tail.
BasisElement vacuum_e0(const Grid& g);

/// Unnormalized b*_j application; preserves position-space reality and the
/// degree cap (kDegreeCapPerAxis per axis).
BasisElement raise(const BasisElement& e, int axis);

/// b_j application (same operator with +d/dx_j).
BasisElement lower(const BasisElement& e, int axis);

/// e_k = (b*_1)^{k1} (b*_2)^{k2} (b*_3)^{k3} e_0 / sqrt(k1! k2! k3!),
/// built by iterated raising; memoized per (grid, index).
BasisElement basis_element(const MultiIndex& k, const Grid& g);

/// phi_k(t,x) = c sum_p exp(i mu(p) t - i p x) e_k(p) hp^dim / mu(p) with
/// c = (2 pi)^{-dim/2}; real at t = 0, conj(phi_k(t,.)) = phi_k(-t,.), and
/// H^{1/2}-orthonormal over k.
ComplexProfile phi_k(const MultiIndex& k, const Grid& g, double t);

/// Coherent overlap (e_{z1}, e_{z2}) = exp <z1, z2>_{H^{1/2}}.
Complex coherent_inner(const ComplexProfile& z1, const ComplexProfile& z2);

}  // namespace nlkg
