#include "nlkg/presets.hpp"

#include "nlkg/fock.hpp"
#include "nlkg/io.hpp"
#include "nlkg/random.hpp"
#include "nlkg/spectral.hpp"

#include <cmath>

namespace nlkg {

ComplexProfile gaussian_profile(const Grid& g, const std::array<double, 3>& center, double width,
                                const std::array<double, 3>& velocity, double amplitude) {
  ComplexArray v(g.size());
  const double L = g.box_length;
  const double h = g.spacing();
  for (Eigen::Index s = 0; s < g.size(); ++s) {
    const auto c = site_coords(g, s);
    double r2 = 0.0;
    double phase = 0.0;
    for (int a = 0; a < g.dim; ++a) {
      double d = c[a] * h - center[a];
      d -= L * std::round(d / L);  // wrap to [-L/2, L/2)
      r2 += d * d;
      phase += velocity[a] * d;
    }
    v[s] = std::exp(-0.5 * r2 / (width * width)) * Complex(std::cos(phase), std::sin(phase));
  }
  ComplexProfile z{g, std::move(v)};
  z.values *= amplitude / sobolev_norm(z, 1.0);
  return z;
}

ComplexProfile mode_profile(const Grid& g, const std::array<int, 3>& index, double amplitude) {
  const double dk = g.dk();
  const double h = g.spacing();
  ComplexArray v(g.size());
  for (Eigen::Index s = 0; s < g.size(); ++s) {
    const auto c = site_coords(g, s);
    double kx = 0.0;
    for (int a = 0; a < g.dim; ++a) kx += dk * index[a] * (c[a] * h);
    v[s] = amplitude * std::cos(kx);
  }
  return {g, std::move(v)};
}

ComplexProfile make_profile(const Grid& g, const ProfileSpec& spec) {
  switch (spec.kind) {
    case ProfileSpec::Kind::Gaussian: {
      std::array<double, 3> c =
          spec.center.value_or(std::array<double, 3>{0.5 * g.box_length, 0.5 * g.box_length,
                                                     0.5 * g.box_length});
      return gaussian_profile(g, c, spec.width, spec.velocity, spec.amplitude);
    }
    case ProfileSpec::Kind::Mode:
      return mode_profile(g, spec.index, spec.amplitude);
    case ProfileSpec::Kind::Hermite: {
      ComplexProfile z = phi_k(MultiIndex{spec.index}, g, 0.0);
      z.values *= spec.amplitude;
      return z;
    }
    case ProfileSpec::Kind::RandomDraw:
      return random_profile(g, spec.seed, {spec.amplitude, spec.corr_length});
    case ProfileSpec::Kind::File: {
      ComplexProfile z = read_profile(spec.path);
      require_same_grid(z.grid, g, "make_profile(file)");
      return z;
    }
  }
  throw std::logic_error("make_profile: unreachable");
}

PhaseSpacePoint make_phase_point(const Grid& g, const ProfileSpec& spec) {
  if (spec.kind == ProfileSpec::Kind::File) {
    PhaseSpacePoint d = read_phase_point(spec.path);
    require_same_grid(d.grid(), g, "make_phase_point(file)");
    return d;
  }
  return map_R_inv(make_profile(g, spec));
}

}  // namespace nlkg
