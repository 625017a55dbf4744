#include "nlkg/spectral.hpp"

#include <cmath>

namespace nlkg {

RealField apply_mu_power(const RealField& f, double s) {
  ComplexArray hat = fft_forward(f.grid, f.values);
  hat *= mu_power_symbol(f.grid, s);
  return {f.grid, fft_inverse_real(f.grid, hat)};
}

ComplexProfile apply_mu_power(const ComplexProfile& f, double s) {
  ComplexArray hat = fft_forward(f.grid, f.values);
  hat *= mu_power_symbol(f.grid, s);
  return {f.grid, fft_inverse(f.grid, hat)};
}

Complex sobolev_inner(const ComplexProfile& z1, const ComplexProfile& z2, double s) {
  require_same_grid(z1.grid, z2.grid, "sobolev_inner");
  const ComplexArray a = fft_forward(z1.grid, z1.values);
  const ComplexArray b = fft_forward(z2.grid, z2.values);
  const RealArray w = mu_power_symbol(z1.grid, 2.0 * s);
  return z1.grid.cell_volume() * (a.conjugate() * w * b).sum();
}

double sobolev_norm(const ComplexProfile& z, double s) {
  const ComplexArray a = fft_forward(z.grid, z.values);
  const RealArray w = mu_power_symbol(z.grid, 2.0 * s);
  return std::sqrt(z.grid.cell_volume() * (a.abs2() * w).sum());
}

double l2_inner(const RealField& f, const RealField& g) {
  require_same_grid(f.grid, g.grid, "l2_inner");
  return f.grid.cell_volume() * (f.values * g.values).sum();
}

double l2_norm(const RealField& f) {
  return std::sqrt(f.grid.cell_volume() * f.values.square().sum());
}

double graph_norm(const PhaseSpacePoint& d) {
  const Grid& g = d.grid();
  const ComplexArray ph = fft_forward(g, d.phi.values);
  const ComplexArray pih = fft_forward(g, d.pi.values);
  const RealArray w = mu_power_symbol(g, 2.0);  // m^2 + |k|^2
  return std::sqrt(g.cell_volume() * ((ph.abs2() * w).sum() + pih.abs2().sum()));
}

ComplexProfile map_R(const PhaseSpacePoint& d) {
  require_same_grid(d.phi.grid, d.pi.grid, "map_R");
  const RealField mp = apply_mu_power(d.pi, -1.0);
  ComplexArray z = d.phi.values.cast<Complex>();
  z += Complex(0.0, 1.0) * mp.values.cast<Complex>();
  return {d.grid(), std::move(z)};
}

PhaseSpacePoint map_R_inv(const ComplexProfile& z) {
  RealField re{z.grid, z.values.real()};
  RealField im{z.grid, z.values.imag()};
  return {std::move(re), apply_mu_power(im, 1.0)};
}

PhaseSpacePoint apply_J(const PhaseSpacePoint& d) {
  RealField a = apply_mu_power(d.pi, -1.0);
  a.values = -a.values;
  RealField b = apply_mu_power(d.phi, 1.0);
  return {std::move(a), std::move(b)};
}

PhaseSpacePoint time_reflect(const PhaseSpacePoint& d) {
  return {d.phi, {d.pi.grid, -d.pi.values}};
}

namespace {

template <typename Array>
Array permute(const Array& v, const IndexArray& perm) {
  Array out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out[perm[i]] = v[i];
  return out;
}

}  // namespace

PhaseSpacePoint space_reflect(const PhaseSpacePoint& d) {
  const IndexArray perm = reflection_permutation(d.grid());
  return {{d.phi.grid, permute(d.phi.values, perm)}, {d.pi.grid, permute(d.pi.values, perm)}};
}

ComplexProfile space_reflect(const ComplexProfile& z) {
  return {z.grid, permute(z.values, reflection_permutation(z.grid))};
}

ComplexProfile conj_profile(const ComplexProfile& z) {
  return {z.grid, z.values.conjugate()};
}

ComplexProfile translate(const ComplexProfile& z, const std::array<int, 3>& shift_sites) {
  return {z.grid, permute(z.values, translation_permutation(z.grid, shift_sites))};
}

RealField translate(const RealField& f, const std::array<int, 3>& shift_sites) {
  return {f.grid, permute(f.values, translation_permutation(f.grid, shift_sites))};
}

PhaseSpacePoint translate(const PhaseSpacePoint& d, const std::array<int, 3>& shift_sites) {
  return {translate(d.phi, shift_sites), translate(d.pi, shift_sites)};
}

double graph_distance(const PhaseSpacePoint& a, const PhaseSpacePoint& b) {
  PhaseSpacePoint diff{{a.phi.grid, a.phi.values - b.phi.values},
                       {a.pi.grid, a.pi.values - b.pi.values}};
  return graph_norm(diff);
}

double sobolev_distance(const ComplexProfile& a, const ComplexProfile& b, double s) {
  return sobolev_norm({a.grid, a.values - b.values}, s);
}

ComplexProfile to_profile(const RealField& f) {
  return {f.grid, f.values.cast<Complex>()};
}

}  // namespace nlkg
