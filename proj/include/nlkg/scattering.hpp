// Finite-T Moller wave operators and the scattering map of the cubic wave
// equation. The true operators are t -> -/+infinity limits; here T is a fixed
// matching time and every run can emit the Cauchy-in-T diagnostic that
// quantifies the truncation:
//
//   W_in  = U(0 <- -T) U_0(-T <- 0)      (free pullback, nonlinear return)
//   W_out = U(0 <- +T) U_0(+T <- 0)
//   S     = W_out^{-1} W_in

#pragma once

#include "nlkg/evolution.hpp"
#include "nlkg/grid.hpp"

#include <vector>

namespace nlkg {

struct MatchingParams {
  double T = 20.0;
  IntegratorParams integrator;
  bool cauchy_check = false;
};

/// T must stay below 0.4 L so packets cannot wrap (group speed < 1).
bool no_wrap_ok(const Grid& g, double T);

PhaseSpacePoint wave_in(const PhaseSpacePoint& d_in, const MatchingParams& mp);
PhaseSpacePoint wave_out(const PhaseSpacePoint& d_out, const MatchingParams& mp);
PhaseSpacePoint wave_out_inverse(const PhaseSpacePoint& d, const MatchingParams& mp);

/// S = W_out^{-1} W_in.
PhaseSpacePoint scatter(const PhaseSpacePoint& d_in, const MatchingParams& mp);

/// || U(t) W_in d - W_in U_0(t) d ||_{H^1 + L2}; the time-translation
/// intertwining residual (Poincare group restricted to time shifts).
double check_intertwining(const PhaseSpacePoint& d_in, double t, const MatchingParams& mp);

struct ConvergenceRow {
  double T_lo = 0.0;
  double T_hi = 0.0;
  double difference = 0.0;  // ||wave_in(d,T_lo) - wave_in(d,T_hi)||
};

/// Cauchy-in-T table over an increasing T list; rows sorted by T.
std::vector<ConvergenceRow> convergence_report(const PhaseSpacePoint& d_in,
                                               const std::vector<double>& T_list,
                                               const MatchingParams& mp);

/// Operational "solver tolerance": self-convergence of the wave_in path at
/// the run's dt, measured against a dt/2 control run.
double solver_tolerance(const PhaseSpacePoint& d_in, const MatchingParams& mp);

}  // namespace nlkg
