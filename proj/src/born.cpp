#include "nlkg/born.hpp"

#include "nlkg/fft.hpp"
#include "nlkg/fock.hpp"
#include "nlkg/spectral.hpp"

#include <cmath>

namespace nlkg {

ComplexProfile born_first(const ComplexProfile& z) { return z; }

ComplexProfile born_third(const ComplexProfile& z, const MatchingParams& mp,
                          std::optional<double> lambda_override) {
  const Grid& g = z.grid;
  const double lambda = lambda_override.value_or(g.coupling);
  const long m = std::max<long>(1, std::lround(std::ceil(mp.T / mp.integrator.dt - 1e-12)));
  const double ds = mp.T / static_cast<double>(m);

  const RealArray mu = mu_values(g);
  const ComplexArray phase_step = ((mu * ds).cos() + Complex(0.0, 1.0) * (mu * ds).sin()).eval();
  const auto keep = mp.integrator.dealias
                        ? std::optional(dealias_mask(g))
                        : std::nullopt;

  // March the free solution u_in(s) from s = -T to 0 in spectral space and
  // accumulate trapezoid-weighted exp(i mu s) * fft(u_in^3).
  const PhaseSpacePoint d0 = map_R_inv(z);
  PhaseSpacePoint d = free_propagate(d0, -mp.T);
  ComplexArray phi_hat = fft_forward(g, d.phi.values);
  ComplexArray pi_hat = fft_forward(g, d.pi.values);
  const ComplexArray cos_ds = (mu * ds).cos().cast<Complex>().eval();
  const ComplexArray sinc_ds = ((mu * ds).sin() / mu).cast<Complex>().eval();
  const ComplexArray msin_ds = (-(mu * (mu * ds).sin())).cast<Complex>().eval();

  ComplexArray phase = ((mu * (-mp.T)).cos() + Complex(0.0, 1.0) * (mu * (-mp.T)).sin()).eval();
  ComplexArray acc = ComplexArray::Zero(g.size());

  for (long j = 0; j <= m; ++j) {
    ComplexArray hat = keep ? keep->select(phi_hat, Complex(0.0)).eval() : phi_hat;
    const RealArray u = fft_inverse(g, hat).real();
    ComplexArray cube_hat = fft_forward(g, RealArray(u * u * u));
    if (keep) cube_hat = keep->select(cube_hat, Complex(0.0));
    const double wgt = (j == 0 || j == m) ? 0.5 : 1.0;
    acc += wgt * (phase * cube_hat);
    if (j == m) break;
    ComplexArray phi_next = cos_ds * phi_hat + sinc_ds * pi_hat;
    pi_hat = msin_ds * phi_hat + cos_ds * pi_hat;
    phi_hat = std::move(phi_next);
    phase *= phase_step;
  }

  ComplexArray out = Complex(0.0, -1.0) * lambda * ds * (acc / mu);
  return {g, fft_inverse(g, out)};
}

OrderFit order_scaling(const ComplexProfile& z, const MatchingParams& mp,
                       const std::vector<double>& eps_list) {
  OrderFit fit;
  std::vector<double> xs, ys;
  for (double eps : eps_list) {
    const ComplexProfile ze{z.grid, eps * z.values};
    const ComplexProfile img = rwr(ze, mp);
    const double diff = sobolev_distance(img, ze, 1.0);
    fit.samples.push_back({eps, diff});
    xs.push_back(eps);
    ys.push_back(diff);
  }
  const double scale = sobolev_norm(z, 1.0);
  for (double y : ys)
    if (y < 1e-13 * std::max(1.0, scale)) fit.degenerate = true;
  if (!fit.degenerate) fit.exponent = fit_loglog_slope(xs, ys);
  return fit;
}

namespace {

Complex annihilation_eigenvalue(const RealField& f, const ComplexProfile& z) {
  return sobolev_inner(to_profile(apply_mu_power(f, -1.0)), z, 0.5);
}

}  // namespace

Complex wick_monomial(const std::vector<RealField>& fs, const CoherentCombo& chi1,
                      const CoherentCombo& chi2) {
  const std::size_t n = fs.size();
  if (n > 4) throw std::invalid_argument("wick_monomial: n <= 4 at desk scale");
  Complex total(0.0, 0.0);
  for (const auto& [a1, z1] : chi1.terms) {
    for (const auto& [a2, z2] : chi2.terms) {
      std::vector<Complex> p1(n), p2(n);
      for (std::size_t k = 0; k < n; ++k) {
        p1[k] = annihilation_eigenvalue(fs[k], z1);
        p2[k] = annihilation_eigenvalue(fs[k], z2);
      }
      Complex subset_sum(0.0, 0.0);
      for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        Complex term(1.0, 0.0);
        for (std::size_t k = 0; k < n; ++k)
          term *= (mask >> k) & 1 ? std::conj(p1[k]) : p2[k];
        subset_sum += term;
      }
      total += std::conj(a1) * a2 * std::pow(2.0, -0.5 * static_cast<double>(n)) * subset_sum *
               coherent_inner(z1, z2);
    }
  }
  return total;
}

BornCompareReport kernel_vs_born(const ComplexProfile& z1, const ComplexProfile& z2,
                                 const MatchingParams& mp) {
  const ComplexProfile w{z1.grid, z1.values.conjugate() + z2.values};
  const ComplexProfile wb = conj_profile(w);
  const ComplexProfile b3 = born_third(w, mp);
  const ComplexProfile b3b = born_third(wb, mp);
  ComplexArray model =
      0.5 * ((w.values + b3.values) + (wb.values + b3b.values).conjugate());

  const KernelValue kv = kernel(z1, z2, mp);
  BornCompareReport rep;
  rep.residual = sobolev_norm({z1.grid, kv.profile.values - model}, 1.0);
  rep.model_norm = sobolev_norm({z1.grid, std::move(model)}, 1.0);
  rep.kernel_norm = sobolev_norm(kv.profile, 1.0);
  return rep;
}

double fit_loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const std::size_t n = x.size();
  for (std::size_t i = 0; i < n; ++i) {
    const double lx = std::log(x[i]);
    const double ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double denom = n * sxx - sx * sx;
  if (denom == 0.0) return 0.0;
  return (n * sxy - sx * sy) / denom;
}

}  // namespace nlkg
