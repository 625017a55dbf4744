// Analytic profile presets shared by the CLI and the test surface.
//
// Amplitude semantics: gaussian and random draws are H^1-normalized to the
// requested amplitude; mode and hermite use the amplitude as the literal
// coefficient (the single-mode analytic comparisons need exact coefficients).

#pragma once

#include "nlkg/config.hpp"
#include "nlkg/grid.hpp"

namespace nlkg {

/// Wave packet exp(-|x-c|^2 / (2 w^2)) exp(i v.(x-c)) scaled to H^1 norm
/// `amplitude`; displacement wraps periodically.
ComplexProfile gaussian_profile(const Grid& g, const std::array<double, 3>& center, double width,
                                const std::array<double, 3>& velocity, double amplitude);

/// amplitude * cos(k.x) with integer mode numbers (k = 2 pi index / L).
ComplexProfile mode_profile(const Grid& g, const std::array<int, 3>& index, double amplitude);

ComplexProfile make_profile(const Grid& g, const ProfileSpec& spec);

PhaseSpacePoint make_phase_point(const Grid& g, const ProfileSpec& spec);

}  // namespace nlkg
