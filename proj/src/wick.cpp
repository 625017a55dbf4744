#include "nlkg/wick.hpp"

#include "nlkg/fft.hpp"
#include "nlkg/spectral.hpp"

#include <cmath>

namespace nlkg {

namespace {

ComplexProfile add(const ComplexProfile& a, const ComplexProfile& b) {
  require_same_grid(a.grid, b.grid, "wick");
  return {a.grid, a.values + b.values};
}

}  // namespace

ComplexProfile rwr(const ComplexProfile& z, const MatchingParams& mp) {
  return map_R(wave_in(map_R_inv(z), mp));
}

ComplexProfile rsr(const ComplexProfile& z, const MatchingParams& mp) {
  return map_R(scatter(map_R_inv(z), mp));
}

namespace {

template <typename Map>
KernelValue kernel_impl(const ComplexProfile& z1, const ComplexProfile& z2, Map&& wmap) {
  require_same_grid(z1.grid, z2.grid, "kernel");
  const Complex pref = coherent_inner(z1, z2);
  const ComplexProfile w = add(conj_profile(z1), z2);
  const ComplexProfile a = wmap(w);
  const ComplexProfile b = wmap(conj_profile(w));
  return {pref, {z1.grid, 0.5 * (a.values + b.values.conjugate())}};
}

}  // namespace

KernelValue kernel(const ComplexProfile& z1, const ComplexProfile& z2, const MatchingParams& mp) {
  return kernel_impl(z1, z2, [&](const ComplexProfile& w) { return rwr(w, mp); });
}

KernelValue kernel_out(const ComplexProfile& z1, const ComplexProfile& z2,
                       const MatchingParams& mp) {
  return kernel_impl(z1, z2, [&](const ComplexProfile& w) { return rsr(w, mp); });
}

Complex smear(const KernelValue& kv, const RealField& h) {
  require_same_grid(kv.profile.grid, h.grid, "smear");
  const Complex integral =
      h.grid.cell_volume() * (kv.profile.values * h.values.cast<Complex>()).sum();
  return kv.prefactor * integral;
}

Complex smear_spectral(const KernelValue& kv, const RealField& h) {
  require_same_grid(kv.profile.grid, h.grid, "smear_spectral");
  const ComplexProfile mh = to_profile(apply_mu_power(h, -1.0));
  // <conj(profile), mu^{-1} h>_{H^{1/2}} = integral of profile * h
  return kv.prefactor * sobolev_inner(conj_profile(kv.profile), mh, 0.5);
}

KernelValue kernel_evolved(const ComplexProfile& z1, const ComplexProfile& z2, double t1,
                           double s1, double t2, double s2, const MatchingParams& mp) {
  return kernel(damped_flow_z(z1, t1, s1), damped_flow_z(z2, t2, s2), mp);
}

ComplexProfile bilinear_form(const CoherentCombo& chi1, const CoherentCombo& chi2,
                             const MatchingParams& mp) {
  if (chi1.terms.empty() || chi2.terms.empty())
    throw std::invalid_argument("bilinear_form: empty combination");
  const Grid& g = chi1.terms.front().second.grid;
  ComplexArray acc = ComplexArray::Zero(g.size());
  for (const auto& [a1, z1] : chi1.terms) {
    for (const auto& [a2, z2] : chi2.terms) {
      const KernelValue kv = kernel(z1, z2, mp);
      acc += std::conj(a1) * a2 * kv.prefactor * kv.profile.values;
    }
  }
  return {g, std::move(acc)};
}

std::vector<RealField> diagonal_trajectory(const ComplexProfile& z,
                                           const std::vector<double>& times,
                                           const MatchingParams& mp) {
  std::vector<RealField> out;
  out.reserve(times.size());
  for (double t : times) {
    const ComplexProfile z_t = free_flow_z(z, -t);
    // w = conj(z_t) + z_t is real, so the two kernel terms are conjugate and
    // the diagonal profile is (rwr(w) + conj rwr(w))/2; one W run per time.
    ComplexProfile w = add(conj_profile(z_t), z_t);
    const double w_residue = w.values.imag().abs().maxCoeff();
    if (!(w_residue <= 1e-9))
      throw numerical_error("diagonal_trajectory: non-real diagonal argument");
    w.values = w.values.real().cast<Complex>();
    const ComplexProfile a = rwr(w, mp);
    out.push_back({z.grid, 0.5 * (a.values + a.values.conjugate()).real()});
  }
  return out;
}

namespace {

double slope_log2(const std::vector<double>& steps, const std::vector<double>& vals) {
  // mean log2 decay per halving over consecutive pairs
  double acc = 0.0;
  int cnt = 0;
  for (std::size_t i = 0; i + 1 < vals.size(); ++i) {
    if (vals[i] <= 0.0 || vals[i + 1] <= 0.0) continue;
    const double ratio = std::log(vals[i] / vals[i + 1]) / std::log(steps[i] / steps[i + 1]);
    acc += ratio;
    ++cnt;
  }
  return cnt ? acc / cnt : 0.0;
}

}  // namespace

HolomorphyReport holomorphy_check(const ComplexProfile& z_a, const ComplexProfile& z_b,
                                  const RealField& h, const MatchingParams& mp,
                                  const HolomorphyParams& hp) {
  const auto scale = [](const ComplexProfile& z, Complex a) {
    return ComplexProfile{z.grid, a * z.values};
  };
  const auto g_at = [&](Complex a1, Complex a2, const MatchingParams& m) {
    return smear(kernel(scale(z_a, a1), scale(z_b, a2), m), h);
  };

  HolomorphyReport rep;
  rep.steps = hp.steps;
  rep.center_value = g_at(hp.alpha1, hp.alpha2, mp);

  MatchingParams half = mp;
  half.integrator.dt = 0.5 * mp.integrator.dt;
  rep.noise_floor = std::abs(g_at(hp.alpha1, hp.alpha2, half) - rep.center_value);

  const Complex i1(0.0, 1.0);
  for (double s : hp.steps) {
    // Wirtinger derivatives by central differences in each variable.
    const Complex dx1 = (g_at(hp.alpha1 + s, hp.alpha2, mp) - g_at(hp.alpha1 - s, hp.alpha2, mp)) /
                        (2.0 * s);
    const Complex dy1 =
        (g_at(hp.alpha1 + i1 * s, hp.alpha2, mp) - g_at(hp.alpha1 - i1 * s, hp.alpha2, mp)) /
        (2.0 * s);
    // g must be holomorphic in conj(alpha1): d/d alpha1 g = (dx - i dy)/2 -> 0
    rep.cr_residual_z1.push_back(0.5 * std::abs(dx1 - i1 * dy1));

    const Complex dx2 = (g_at(hp.alpha1, hp.alpha2 + s, mp) - g_at(hp.alpha1, hp.alpha2 - s, mp)) /
                        (2.0 * s);
    const Complex dy2 =
        (g_at(hp.alpha1, hp.alpha2 + i1 * s, mp) - g_at(hp.alpha1, hp.alpha2 - i1 * s, mp)) /
        (2.0 * s);
    // g must be holomorphic in alpha2: d/d conj(alpha2) g = (dx + i dy)/2 -> 0
    rep.cr_residual_z2.push_back(0.5 * std::abs(dx2 + i1 * dy2));
  }
  rep.slope_z1 = slope_log2(rep.steps, rep.cr_residual_z1);
  rep.slope_z2 = slope_log2(rep.steps, rep.cr_residual_z2);

  Complex mean(0.0, 0.0);
  for (int j = 0; j < hp.circle_points; ++j) {
    const double th = 2.0 * kPi * j / hp.circle_points;
    mean += g_at(hp.alpha1, hp.alpha2 + hp.circle_radius * Complex(std::cos(th), std::sin(th)),
                 mp);
  }
  mean /= static_cast<double>(hp.circle_points);
  rep.cauchy_circle_residual = std::abs(mean - rep.center_value);
  return rep;
}

BoundReport bound_check(const ComplexProfile& z1, const ComplexProfile& z2, const RealField& h,
                        const MatchingParams& mp) {
  const ComplexProfile w = add(conj_profile(z1), z2);
  const double wnorm = sobolev_norm(w, 1.0);
  const KernelValue kv = kernel(z1, z2, mp);
  BoundReport rep;
  rep.smear_abs = std::abs(smear(kv, h));
  rep.bound_scale = l2_norm(h) * std::exp(sobolev_inner(z1, z2, 0.5).real()) * wnorm;
  rep.ratio = rep.bound_scale > 0.0 ? rep.smear_abs / rep.bound_scale : 0.0;
  return rep;
}

double covariance_check(const ComplexProfile& z1, const ComplexProfile& z2, double t,
                        const std::array<double, 3>& shift, const MatchingParams& mp) {
  const Grid& g = z1.grid;
  std::array<int, 3> sites{0, 0, 0};
  for (int a = 0; a < g.dim; ++a) {
    const double s = shift[a] / g.spacing();
    const double r = std::round(s);
    if (std::abs(s - r) > 1e-9)
      throw std::invalid_argument("covariance_check: shift not lattice-commensurate");
    sites[a] = static_cast<int>(r);
  }

  const auto nonlinear_flow_z = [&](const ComplexProfile& u, double tau) {
    return map_R(nonlinear_evolve(map_R_inv(u), tau, mp.integrator));
  };

  double worst = 0.0;
  const ComplexProfile w0 = add(conj_profile(z1), z2);
  for (const ComplexProfile& w : {w0, conj_profile(w0)}) {
    const ComplexProfile route_labels = rwr(translate(free_flow_z(w, t), sites), mp);
    const ComplexProfile route_dynamic = translate(nonlinear_flow_z(rwr(w, mp), t), sites);
    worst = std::max(worst, sobolev_distance(route_labels, route_dynamic, 1.0));
  }

  // The exponential prefactor is invariant under the label map.
  const auto lab = [&](const ComplexProfile& z) { return translate(free_flow_z(z, t), sites); };
  const Complex p0 = sobolev_inner(z1, z2, 0.5);
  const Complex p1 = sobolev_inner(lab(z1), lab(z2), 0.5);
  worst = std::max(worst, std::abs(p1 - p0));
  return worst;
}

}  // namespace nlkg
