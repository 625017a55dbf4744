#include "nlkg/evolution.hpp"

#include "nlkg/fft.hpp"
#include "nlkg/spectral.hpp"

#include <cmath>
#include <map>
#include <vector>

namespace nlkg {

namespace {

constexpr double kBlowupSup = 1e6;

struct FreeStep {
  RealArray cos_mt;      // cos(mu t)
  RealArray sin_over_mu; // sin(mu t)/mu
  RealArray neg_mu_sin;  // -mu sin(mu t)
};

FreeStep make_free_step(const Grid& g, double t) {
  const RealArray mu = mu_values(g);
  FreeStep f;
  f.cos_mt = (mu * t).cos();
  f.sin_over_mu = (mu * t).sin() / mu;
  f.neg_mu_sin = -(mu * (mu * t).sin());
  return f;
}

// Spectral-space state of one evolution run; phi_hat/pi_hat are the DFTs of
// the (possibly complexified) fields.
struct State {
  ComplexArray phi_hat;
  ComplexArray pi_hat;
};

void apply_free(State& st, const FreeStep& f) {
  ComplexArray phi = f.cos_mt * st.phi_hat + f.sin_over_mu * st.pi_hat;
  st.pi_hat = f.neg_mu_sin * st.phi_hat + f.cos_mt * st.pi_hat;
  st.phi_hat = std::move(phi);
}

struct Stepper {
  Grid grid;
  IntegratorParams params;
  bool complex_field = false;
  Eigen::Array<bool, Eigen::Dynamic, 1> mask;
  std::map<double, FreeStep> free_cache;

  const FreeStep& free_step(double t) {
    auto it = free_cache.find(t);
    if (it == free_cache.end()) it = free_cache.emplace(t, make_free_step(grid, t)).first;
    return it->second;
  }

  void kick(State& st, double dt) {
    ComplexArray hat = st.phi_hat;
    if (params.dealias) hat = mask.select(hat, Complex(0.0));
    ComplexArray phi_x = fft_inverse(grid, hat);
    if (!complex_field) phi_x = phi_x.real().cast<Complex>();

    const double sup = phi_x.abs().maxCoeff();
    if (!std::isfinite(sup) || sup > kBlowupSup)
      throw numerical_error("nonlinear_evolve: field blow-up (sup=" + std::to_string(sup) +
                            ", lambda=" + std::to_string(grid.coupling) + ")");

    ComplexArray cube_hat = fft_forward(grid, ComplexArray(phi_x * phi_x * phi_x));
    if (params.dealias) cube_hat = mask.select(cube_hat, Complex(0.0));
    st.pi_hat -= (grid.coupling * dt) * cube_hat;
  }

  void strang(State& st, double dt) {
    apply_free(st, free_step(0.5 * dt));
    kick(st, dt);
    apply_free(st, free_step(0.5 * dt));
  }

  void step(State& st, double dt) {
    if (params.order == 2) {
      strang(st, dt);
      return;
    }
    // Triple-jump composition: w1, w0 = 1/(2-2^{1/3}), -2^{1/3}/(2-2^{1/3}).
    const double cbrt2 = std::cbrt(2.0);
    const double w1 = 1.0 / (2.0 - cbrt2);
    const double w0 = -cbrt2 / (2.0 - cbrt2);
    strang(st, w1 * dt);
    strang(st, w0 * dt);
    strang(st, w1 * dt);
  }

  void run(State& st, double t_target) {
    if (t_target == 0.0) return;
    const long nsteps = std::max<long>(1, std::lround(std::ceil(std::abs(t_target) / params.dt - 1e-12)));
    const double dt = t_target / static_cast<double>(nsteps);
    for (long i = 0; i < nsteps; ++i) step(st, dt);
  }
};

Stepper make_stepper(const Grid& g, const IntegratorParams& p, bool complex_field) {
  Stepper s;
  s.grid = g;
  s.params = p;
  if (p.order != 2 && p.order != 4)
    throw std::invalid_argument("IntegratorParams: order must be 2 or 4");
  if (!(p.dt > 0.0)) throw std::invalid_argument("IntegratorParams: dt must be > 0");
  s.complex_field = complex_field;
  if (p.dealias) s.mask = dealias_mask(g);
  return s;
}

}  // namespace

double stability_number(const Grid& g, double dt) {
  return mu_values(g).maxCoeff() * dt;
}

PhaseSpacePoint free_propagate(const PhaseSpacePoint& d, double t) {
  require_same_grid(d.phi.grid, d.pi.grid, "free_propagate");
  const Grid& g = d.grid();
  const FreeStep f = make_free_step(g, t);
  const ComplexArray ph = fft_forward(g, d.phi.values);
  const ComplexArray pih = fft_forward(g, d.pi.values);
  ComplexArray phi_new = f.cos_mt * ph + f.sin_over_mu * pih;
  ComplexArray pi_new = f.neg_mu_sin * ph + f.cos_mt * pih;
  return {{g, fft_inverse_real(g, phi_new)}, {g, fft_inverse_real(g, pi_new)}};
}

ComplexProfile free_flow_z(const ComplexProfile& z, double t) {
  const Grid& g = z.grid;
  const RealArray mu = mu_values(g);
  ComplexArray hat = fft_forward(g, z.values);
  hat *= ((mu * t).cos() - Complex(0.0, 1.0) * (mu * t).sin());  // exp(-i mu t)
  return {g, fft_inverse(g, hat)};
}

ComplexProfile damped_flow_z(const ComplexProfile& z, double t, double s) {
  if (!(s >= 0.0)) throw std::invalid_argument("damped_flow_z: s must be >= 0");
  const Grid& g = z.grid;
  const RealArray mu = mu_values(g);
  ComplexArray hat = fft_forward(g, z.values);
  hat *= (-mu * s).exp() * ((mu * t).cos() + Complex(0.0, 1.0) * (mu * t).sin());
  return {g, fft_inverse(g, hat)};
}

PhaseSpacePoint nonlinear_step(const PhaseSpacePoint& d, const IntegratorParams& params) {
  Stepper s = make_stepper(d.grid(), params, false);
  State st{fft_forward(d.grid(), d.phi.values), fft_forward(d.grid(), d.pi.values)};
  s.step(st, params.dt);
  return {{d.grid(), fft_inverse_real(d.grid(), st.phi_hat, 1e-10)},
          {d.grid(), fft_inverse_real(d.grid(), st.pi_hat, 1e-10)}};
}

PhaseSpacePoint nonlinear_evolve(const PhaseSpacePoint& d, double t_target,
                                 const IntegratorParams& params) {
  require_same_grid(d.phi.grid, d.pi.grid, "nonlinear_evolve");
  Stepper s = make_stepper(d.grid(), params, false);
  State st{fft_forward(d.grid(), d.phi.values), fft_forward(d.grid(), d.pi.values)};
  s.run(st, t_target);
  return {{d.grid(), fft_inverse_real(d.grid(), st.phi_hat, 1e-10)},
          {d.grid(), fft_inverse_real(d.grid(), st.pi_hat, 1e-10)}};
}

ComplexPhasePoint nonlinear_evolve_complexified(const ComplexPhasePoint& d, double t_target,
                                                const IntegratorParams& params) {
  require_same_grid(d.phi.grid, d.pi.grid, "nonlinear_evolve_complexified");
  Stepper s = make_stepper(d.phi.grid, params, true);
  State st{fft_forward(d.phi.grid, d.phi.values), fft_forward(d.pi.grid, d.pi.values)};
  s.run(st, t_target);
  return {{d.phi.grid, fft_inverse(d.phi.grid, st.phi_hat)},
          {d.pi.grid, fft_inverse(d.pi.grid, st.pi_hat)}};
}

double energy(const PhaseSpacePoint& d) {
  const Grid& g = d.grid();
  const ComplexArray ph = fft_forward(g, d.phi.values);
  const double quad =
      0.5 * g.cell_volume() *
      ((ph.abs2() * (k_squared(g) + g.mass * g.mass)).sum() +
       fft_forward(g, d.pi.values).abs2().sum());
  const double quart = 0.25 * g.coupling * g.cell_volume() * d.phi.values.pow(4).sum();
  return quad + quart;
}

double energy_free(const PhaseSpacePoint& d) {
  Grid g = d.grid();
  g.coupling = 0.0;
  return energy({{g, d.phi.values}, {g, d.pi.values}});
}

double pde_residual(const PhaseSpacePoint& prev, const PhaseSpacePoint& mid,
                    const PhaseSpacePoint& next, double dt) {
  require_same_grid(prev.grid(), mid.grid(), "pde_residual");
  require_same_grid(mid.grid(), next.grid(), "pde_residual");
  const Grid& g = mid.grid();
  RealArray ddt = (next.phi.values - 2.0 * mid.phi.values + prev.phi.values) / (dt * dt);
  ComplexArray hat = fft_forward(g, mid.phi.values);
  hat *= k_squared(g);  // -Laplace
  const RealArray neg_lap = fft_inverse_real(g, hat, 1e-9);
  RealArray res = ddt + neg_lap + g.mass * g.mass * mid.phi.values +
                  g.coupling * mid.phi.values.pow(3);
  return res.abs().maxCoeff();
}

}  // namespace nlkg
