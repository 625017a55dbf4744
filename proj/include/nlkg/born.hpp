// Born/Taylor machinery for the wave operator in the z-coordinate. The
// integral form of the dynamics gives the first iterate
//
//   RWR^{-1}(z) = z - i lambda mu^{-1} int_{-T}^{0} exp(i mu s) u_in(s)^3 ds
//                 + O(lambda^2),
//
// with u_in the free solution of the data R^{-1} z; the Duhamel integral is
// the retarded kick propagated freely to t = 0 (the delta source enters the
// pi slot), discretized by the trapezoid rule at the integrator's dt.
// Only odd orders survive (the cubic flow is odd), so the expansion's even
// kernels vanish; tests probe this through parity and remainder exponents.

#pragma once

#include "nlkg/grid.hpp"
#include "nlkg/scattering.hpp"
#include "nlkg/wick.hpp"

#include <optional>
#include <vector>

namespace nlkg {

struct BornTerm {
  int order = 1;           // odd: 1, 3, ...
  ComplexProfile value;
};

/// R_1 = identity in the z-coordinate.
ComplexProfile born_first(const ComplexProfile& z);

/// Third-order Born term (lambda included; pass lambda_override = 1 for the
/// unit-coupling kernel). Exactly linear in lambda, exactly cubic in the
/// profile amplitude.
ComplexProfile born_third(const ComplexProfile& z, const MatchingParams& mp,
                          std::optional<double> lambda_override = std::nullopt);

struct OrderFit {
  double exponent = 0.0;
  bool degenerate = false;                      // differences at roundoff, no fit
  std::vector<std::pair<double, double>> samples;  // (eps, ||rwr(eps z) - eps z||)
};

/// Fit ||rwr(eps z) - eps z|| ~ eps^q over eps_list; q should be 3.
OrderFit order_scaling(const ComplexProfile& z, const MatchingParams& mp,
                       const std::vector<double>& eps_list);

/// Wick monomial :phi_in(f_1)...phi_in(f_n): between coherent combinations,
/// evaluated in closed form through annihilation eigenvalues
/// a(f) e_z = <mu^{-1} f, z>_{H^{1/2}} e_z and the 2^n subset sum.
Complex wick_monomial(const std::vector<RealField>& fs, const CoherentCombo& chi1,
                      const CoherentCombo& chi2);

struct BornCompareReport {
  double residual = 0.0;        // H^1 distance, kernel profile vs 3rd-order model
  double model_norm = 0.0;
  double kernel_norm = 0.0;
};

/// Compares kernel(z1,z2).profile against the order-3 truncation
/// (w + B3(w) + conj(w-bar + B3(w-bar)))/2, w = z1bar + z2.
BornCompareReport kernel_vs_born(const ComplexProfile& z1, const ComplexProfile& z2,
                                 const MatchingParams& mp);

/// Least-squares slope of log(y) against log(x).
double fit_loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace nlkg
