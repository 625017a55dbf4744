// Wick kernels of the interacting and outgoing field between coherent
// vectors:
//
//   phi(e_{z1}, e_{z2}) = exp<z1,z2>_{H^{1/2}}
//       * (1/2) ( RWR^{-1}(conj z1 + z2) + conj RWR^{-1}(conj(conj z1 + z2)) )
//
// and the same with RSR^{-1} for the out-field. Values are kept factored as
// (prefactor, profile) so the exponential prefactor cannot overflow the
// H^1-valued factor; the product is materialized only in smearing and
// comparisons. Hermitian symmetry conj(kernel(z1,z2)) = kernel(z2,z1) holds
// term by term (the swap exchanges w and conj w).

#pragma once

#include "nlkg/fock.hpp"
#include "nlkg/grid.hpp"
#include "nlkg/scattering.hpp"

#include <utility>
#include <vector>

namespace nlkg {

struct KernelValue {
  Complex prefactor;       // exp <z1, z2>_{H^{1/2}}
  ComplexProfile profile;  // the H^1-valued factor
};

inline ComplexArray full_value(const KernelValue& kv) {
  return kv.prefactor * kv.profile.values;
}

/// R W_in R^{-1} on complex profiles; identity at lambda = 0. Complex-analytic
/// in the continuum theory (Thm-2.1-style holomorphy is *tested*, not assumed:
/// the finite-T torus surrogate has a solver-noise floor).
ComplexProfile rwr(const ComplexProfile& z, const MatchingParams& mp);

/// R S R^{-1} on complex profiles; identity at lambda = 0.
ComplexProfile rsr(const ComplexProfile& z, const MatchingParams& mp);

KernelValue kernel(const ComplexProfile& z1, const ComplexProfile& z2, const MatchingParams& mp);
KernelValue kernel_out(const ComplexProfile& z1, const ComplexProfile& z2,
                       const MatchingParams& mp);

/// Smeared kernel at time zero: prefactor * h^dim sum_x profile(x) h(x).
Complex smear(const KernelValue& kv, const RealField& h);

/// Same value through the H^{1/2} pairing with mu^{-1} h (the dual formula);
/// agreement with smear is a consistency check, not an alias.
Complex smear_spectral(const KernelValue& kv, const RealField& h);

/// kernel(exp(i mu t1 - mu s1) z1, exp(i mu t2 - mu s2) z2); s1, s2 >= 0.
KernelValue kernel_evolved(const ComplexProfile& z1, const ComplexProfile& z2, double t1,
                           double s1, double t2, double s2, const MatchingParams& mp);

/// chi = sum_j alpha_j e(z_j), a finite coherent combination.
struct CoherentCombo {
  std::vector<std::pair<Complex, ComplexProfile>> terms;
};

/// phi(chi1, chi2) = sum_{j1,j2} conj(a1_{j1}) a2_{j2} prefactor * profile;
/// antilinear in chi1 coefficients, linear in chi2.
ComplexProfile bilinear_form(const CoherentCombo& chi1, const CoherentCombo& chi2,
                             const MatchingParams& mp);

/// u(t, .) = profile of kernel(z_t, z_t) with z_t = free_flow_z(z, -t); the
/// diagonal is real (asserted <= 1e-9 residue) and satisfies the wave
/// equation up to finite-difference and matching error.
std::vector<RealField> diagonal_trajectory(const ComplexProfile& z,
                                           const std::vector<double>& times,
                                           const MatchingParams& mp);

struct HolomorphyParams {
  Complex alpha1{0.3, 0.15};
  Complex alpha2{0.25, -0.2};
  std::vector<double> steps{0.4, 0.2, 0.1};
  double circle_radius = 0.3;
  int circle_points = 8;
};

struct HolomorphyReport {
  std::vector<double> steps;
  std::vector<double> cr_residual_z1;   // |d g / d alpha1| (antiholomorphy test)
  std::vector<double> cr_residual_z2;   // |d g / d conj(alpha2)| (holomorphy test)
  double slope_z1 = 0.0;                // log2 decay rate per step halving
  double slope_z2 = 0.0;
  double cauchy_circle_residual = 0.0;  // |mean over circle - center value|
  double noise_floor = 0.0;             // dt/2 control on the center value
  Complex center_value;
};

/// g(a1, a2) = smear(kernel(a1 z_a, a2 z_b), h): finite-difference
/// Cauchy-Riemann residuals must fall as step^2 down to the solver floor,
/// and the discrete Cauchy-circle mean must match the center value.
HolomorphyReport holomorphy_check(const ComplexProfile& z_a, const ComplexProfile& z_b,
                                  const RealField& h, const MatchingParams& mp,
                                  const HolomorphyParams& hp = {});

struct BoundReport {
  double smear_abs = 0.0;
  double bound_scale = 0.0;  // |h|_{L2} exp(Re<z1,z2>) |conj z1 + z2|_{H^1}
  double ratio = 0.0;        // 0 when the argument vanishes (then smear must too)
};

/// Ratio |<h, phi(e_{z1},e_{z2})>| / (|h|_{L2} exp(Re<z1,z2>) |z1bar+z2|_{H^1});
/// the estimate's constant is empirical, so the ratio is reported and its
/// stability across sweeps asserted by the caller.
BoundReport bound_check(const ComplexProfile& z1, const ComplexProfile& z2, const RealField& h,
                        const MatchingParams& mp);

/// Space-time translation covariance, factorized through the kernel's two
/// W-routes: for w in {z1bar+z2, conj(z1bar+z2)} compares
///   rwr(T_a P(-t) w)            (kernel of translated/evolved profiles)
/// against
///   T_a N_t rwr(w)              (dynamically transported kernel factor)
/// where P(-t) = free_flow_z(. , t) and N_t is the nonlinear flow in the
/// z-coordinate. Also verifies prefactor invariance. Returns the largest
/// H^1 residual; the shift must be lattice-commensurate.
double covariance_check(const ComplexProfile& z1, const ComplexProfile& z2, double t,
                        const std::array<double, 3>& shift, const MatchingParams& mp);

}  // namespace nlkg
