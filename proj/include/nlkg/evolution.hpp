// Time evolution for the cubic wave equation on the periodic lattice,
//
//   box u + m^2 u + lambda u^3 = 0,
//
// split into the exactly-solvable free flow (a Fourier multiplier) and the
// pointwise kick pi -> pi - lambda phi^3 dt. Strang composition (order 2)
// or the triple-jump composition of Strang (order 4). Both sub-flows are
// exact, so splitting error is the only integrator error.
//
// Sign conventions, fixed once for the whole project:
//   * free_propagate(d, t) moves Cauchy data forward by t:
//       phihat <- cos(mu t) phihat + mu^{-1} sin(mu t) pihat
//       pihat  <- -mu sin(mu t) phihat + cos(mu t) pihat
//   * free_flow_z(z, t) = map_R(free_propagate(map_R_inv(z), t)) is the
//     diagonal multiplier exp(-i mu(k) t): coherent labels counter-rotate
//     against the basis functions phi_k(t,x), which carry exp(+i mu(p) t).
//   * damped_flow_z(z, t, s) is the multiplier exp(+i mu t - mu s), the
//     state-evolution phase (labels of exp(itH - sH)-evolved coherent
//     vectors co-rotate); hence damped_flow_z(z, t, 0) == free_flow_z(z, -t).

#pragma once

#include "nlkg/grid.hpp"

#include <stdexcept>

namespace nlkg {

/// Thrown when the field blows up or turns non-finite mid-run.
class numerical_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct IntegratorParams {
  double dt = 1e-3;
  int order = 4;         // 2 = Strang, 4 = triple-jump composition
  bool dealias = true;   // 1/2-rule truncation of the cubic term
};

/// max_k mu(k) * dt; accuracy degrades when this grows large (the scheme
/// stays stable). Callers may warn on it.
double stability_number(const Grid& g, double dt);

PhaseSpacePoint free_propagate(const PhaseSpacePoint& d, double t);

ComplexProfile free_flow_z(const ComplexProfile& z, double t);

/// exp(i mu t - mu s) multiplier; s >= 0 required. Contraction by at least
/// exp(-m s) in every H^sigma for s > 0.
ComplexProfile damped_flow_z(const ComplexProfile& z, double t, double s);

/// One full step of size params.dt (order 2 or 4).
PhaseSpacePoint nonlinear_step(const PhaseSpacePoint& d, const IntegratorParams& params);

/// Evolve to t_target (either sign) in uniform steps of magnitude <= params.dt.
PhaseSpacePoint nonlinear_evolve(const PhaseSpacePoint& d, double t_target,
                                 const IntegratorParams& params);

/// Holomorphic continuation of the same integrator: both components complex,
/// the kick cubes the complex samples. Needed by the covariance checks.
struct ComplexPhasePoint {
  ComplexProfile phi;
  ComplexProfile pi;
};
ComplexPhasePoint nonlinear_evolve_complexified(const ComplexPhasePoint& d, double t_target,
                                                const IntegratorParams& params);

/// E = integral of  pi^2/2 + |grad phi|^2/2 + m^2 phi^2/2 + lambda phi^4/4.
double energy(const PhaseSpacePoint& d);

/// Same functional with lambda forced to zero (free energy of asymptotic data).
double energy_free(const PhaseSpacePoint& d);

/// Sup-norm of (phi(t+dt) - 2 phi(t) + phi(t-dt))/dt^2 - Laplace phi(t)
/// + m^2 phi(t) + lambda phi(t)^3 with the spectral Laplacian. O(dt^2) on a
/// genuine solution sampled at spacing dt.
double pde_residual(const PhaseSpacePoint& prev, const PhaseSpacePoint& mid,
                    const PhaseSpacePoint& next, double dt);

}  // namespace nlkg
