// Seeded Gaussian spectral ensemble (part of the external contract):
// draw zhat(k) = exp(-|k|^2 L_c^2 / 2) (a_k + i b_k)/sqrt(2) with a, b
// standard normals from Box-Muller over std::mt19937_64 uniforms, in flat
// lattice order, then rescale so |z|_{H^1} equals the requested amplitude.
// Phase-space draws are map_R_inv of a profile draw, which lands the graph
// norm exactly on the amplitude.

#pragma once

#include "nlkg/grid.hpp"

#include <cstdint>

namespace nlkg {

struct EnsembleParams {
  double amplitude = 0.1;
  double corr_length = 2.0;  // spectral envelope scale L_c
};

ComplexProfile random_profile(const Grid& g, std::uint64_t seed, const EnsembleParams& p);
PhaseSpacePoint random_phase_point(const Grid& g, std::uint64_t seed, const EnsembleParams& p);

}  // namespace nlkg
