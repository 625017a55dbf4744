#include "nlkg/scattering.hpp"

#include "nlkg/spectral.hpp"

#include <algorithm>

namespace nlkg {

bool no_wrap_ok(const Grid& g, double T) { return T <= 0.4 * g.box_length; }

PhaseSpacePoint wave_in(const PhaseSpacePoint& d_in, const MatchingParams& mp) {
  return nonlinear_evolve(free_propagate(d_in, -mp.T), mp.T, mp.integrator);
}

PhaseSpacePoint wave_out(const PhaseSpacePoint& d_out, const MatchingParams& mp) {
  return nonlinear_evolve(free_propagate(d_out, mp.T), -mp.T, mp.integrator);
}

PhaseSpacePoint wave_out_inverse(const PhaseSpacePoint& d, const MatchingParams& mp) {
  return free_propagate(nonlinear_evolve(d, mp.T, mp.integrator), -mp.T);
}

PhaseSpacePoint scatter(const PhaseSpacePoint& d_in, const MatchingParams& mp) {
  return wave_out_inverse(wave_in(d_in, mp), mp);
}

double check_intertwining(const PhaseSpacePoint& d_in, double t, const MatchingParams& mp) {
  const PhaseSpacePoint lhs = nonlinear_evolve(wave_in(d_in, mp), t, mp.integrator);
  const PhaseSpacePoint rhs = wave_in(free_propagate(d_in, t), mp);
  return graph_distance(lhs, rhs);
}

std::vector<ConvergenceRow> convergence_report(const PhaseSpacePoint& d_in,
                                               const std::vector<double>& T_list,
                                               const MatchingParams& mp) {
  std::vector<double> ts = T_list;
  std::sort(ts.begin(), ts.end());
  std::vector<PhaseSpacePoint> w;
  w.reserve(ts.size());
  for (double T : ts) {
    MatchingParams m = mp;
    m.T = T;
    w.push_back(wave_in(d_in, m));
  }
  std::vector<ConvergenceRow> rows;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    rows.push_back({ts[i], ts[i + 1], graph_distance(w[i], w[i + 1])});
  return rows;
}

double solver_tolerance(const PhaseSpacePoint& d_in, const MatchingParams& mp) {
  MatchingParams half = mp;
  half.integrator.dt = 0.5 * mp.integrator.dt;
  return graph_distance(wave_in(d_in, mp), wave_in(d_in, half));
}

}  // namespace nlkg
