#include "nlkg/random.hpp"

#include "nlkg/fft.hpp"
#include "nlkg/spectral.hpp"

#include <cmath>
#include <random>

namespace nlkg {

namespace {

// Box-Muller on explicit uniforms; std::normal_distribution is
// implementation-defined and would break the ensemble contract.
class GaussianStream {
 public:
  explicit GaussianStream(std::uint64_t seed) : rng_(seed) {}

  double next() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = uniform_open();
    const double u2 = uniform_open();
    const double r = std::sqrt(-2.0 * std::log(u1));
    spare_ = r * std::sin(2.0 * kPi * u2);
    have_spare_ = true;
    return r * std::cos(2.0 * kPi * u2);
  }

 private:
  double uniform_open() {
    // (0, 1]: guards the log
    return (static_cast<double>(rng_() >> 11) + 1.0) * 0x1.0p-53;
  }

  std::mt19937_64 rng_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace

ComplexProfile random_profile(const Grid& g, std::uint64_t seed, const EnsembleParams& p) {
  GaussianStream gauss(seed);
  const RealArray k2 = k_squared(g);
  ComplexArray hat(g.size());
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (Eigen::Index s = 0; s < g.size(); ++s) {
    const double a = gauss.next();
    const double b = gauss.next();
    const double env = std::exp(-0.5 * k2[s] * p.corr_length * p.corr_length);
    hat[s] = env * inv_sqrt2 * Complex(a, b);
  }
  ComplexProfile z{g, fft_inverse(g, hat)};
  const double norm = sobolev_norm(z, 1.0);
  z.values *= p.amplitude / norm;
  return z;
}

PhaseSpacePoint random_phase_point(const Grid& g, std::uint64_t seed, const EnsembleParams& p) {
  return map_R_inv(random_profile(g, seed, p));
}

}  // namespace nlkg
