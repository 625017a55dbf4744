#include "nlkg/fock.hpp"

#include "nlkg/fft.hpp"
#include "nlkg/spectral.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <tuple>

namespace nlkg {

namespace {

// g(x) = cpx * ifft(F), F = fft(g) / cpx, with cpx = (2 pi)^{-d/2} hp^d sqrt(N).
double xrep_scale(const Grid& g) {
  return std::pow(2.0 * kPi, -0.5 * g.dim) * g.dual_cell_volume() *
         std::sqrt(static_cast<double>(g.size()));
}

ComplexArray apply_symbol(const Grid& g, const ComplexArray& x, const RealArray& symbol) {
  ComplexArray hat = fft_forward(g, x);
  hat *= symbol;
  return fft_inverse(g, hat);
}

// b*_j (sign = -1) and b_j (sign = +1) in the x-representation.
ComplexProfile ladder_apply(const ComplexProfile& f, int axis, double deriv_sign) {
  const Grid& g = f.grid;
  const RealArray sqrt_mu = mu_power_symbol(g, 0.5);
  const RealArray inv_sqrt_mu = mu_power_symbol(g, -0.5);

  // mu^{1/2} x_j mu^{-1/2} f
  ComplexArray a = apply_symbol(g, f.values, inv_sqrt_mu);
  a *= centered_coordinate(g, axis);
  a = apply_symbol(g, a, sqrt_mu);

  // d/dx_j f (spectral)
  ComplexArray dhat = fft_forward(g, f.values);
  dhat *= Complex(0.0, 1.0) * k_component(g, axis);
  const ComplexArray d = fft_inverse(g, dhat);

  return {g, ((a + deriv_sign * d) / std::sqrt(2.0)).eval()};
}

}  // namespace

bool gaussian_guard_ok(const Grid& g) {
  const double p_edge = kPi / g.spacing();  // largest |p_a| on the dual lattice
  return std::exp(-0.5 * p_edge * p_edge) < 1e-14;
}

ComplexArray mass_shell_samples(const BasisElement& e) {
  return fft_forward(e.xspace.grid, e.xspace.values) / xrep_scale(e.xspace.grid);
}

Complex shell_inner(const BasisElement& a, const BasisElement& b) {
  require_same_grid(a.xspace.grid, b.xspace.grid, "shell_inner");
  const Grid& g = a.xspace.grid;
  const ComplexArray fa = mass_shell_samples(a);
  const ComplexArray fb = mass_shell_samples(b);
  return g.dual_cell_volume() * (fa.conjugate() * fb / mu_values(g)).sum();
}

double shell_norm(const BasisElement& e) {
  const Grid& g = e.xspace.grid;
  return std::sqrt(g.dual_cell_volume() *
                   (mass_shell_samples(e).abs2() / mu_values(g)).sum());
}

BasisElement vacuum_e0(const Grid& g) {
  const RealArray p2 = k_squared(g);
  const RealArray f0 = std::pow(kPi, -0.25 * g.dim) *
                       (p2 + g.mass * g.mass).pow(0.25) * (-0.5 * p2).exp();
  const ComplexArray x = xrep_scale(g) * fft_inverse(g, f0.cast<Complex>().eval());
  return {MultiIndex{}, {g, x}};
}

BasisElement raise(const BasisElement& e, int axis) {
  if (axis < 0 || axis >= e.xspace.grid.dim) throw std::invalid_argument("raise: bad axis");
  if (e.index.k[axis] + 1 > kDegreeCapPerAxis)
    throw std::invalid_argument("raise: degree cap exceeded");
  MultiIndex idx = e.index;
  idx.k[axis] += 1;
  return {idx, ladder_apply(e.xspace, axis, -1.0)};
}

BasisElement lower(const BasisElement& e, int axis) {
  if (axis < 0 || axis >= e.xspace.grid.dim) throw std::invalid_argument("lower: bad axis");
  MultiIndex idx = e.index;
  idx.k[axis] = std::max(0, idx.k[axis] - 1);
  return {idx, ladder_apply(e.xspace, axis, +1.0)};
}

namespace {

using BasisKey = std::tuple<int, int, double, double, int, int, int>;

BasisKey basis_key(const Grid& g, const MultiIndex& k) {
  return {g.dim, g.n, g.box_length, g.mass, k.k[0], k.k[1], k.k[2]};
}

}  // namespace

BasisElement basis_element(const MultiIndex& k, const Grid& g) {
  for (int a = 0; a < 3; ++a) {
    if (k.k[a] < 0 || (a >= g.dim && k.k[a] != 0))
      throw std::invalid_argument("basis_element: bad multi-index");
    if (k.k[a] > kDegreeCapPerAxis)
      throw std::invalid_argument("basis_element: degree cap exceeded");
  }

  static std::mutex mtx;
  static std::map<BasisKey, BasisElement> cache;
  {
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(basis_key(g, k));
    if (it != cache.end()) return it->second;
  }

  BasisElement e = k.degree() == 0 ? vacuum_e0(g) : [&] {
    MultiIndex prev = k;
    int axis = 0;
    for (int a = g.dim - 1; a >= 0; --a)
      if (k.k[a] > 0) { axis = a; break; }
    prev.k[axis] -= 1;
    BasisElement below = basis_element(prev, g);
    BasisElement up = raise(below, axis);
    up.xspace.values /= std::sqrt(static_cast<double>(k.k[axis]));
    return up;
  }();

  {
    std::lock_guard<std::mutex> lock(mtx);
    cache.emplace(basis_key(g, k), e);
  }
  return e;
}

ComplexProfile phi_k(const MultiIndex& k, const Grid& g, double t) {
  const BasisElement e = basis_element(k, g);
  const ComplexArray f = mass_shell_samples(e);
  const RealArray mu = mu_values(g);
  ComplexArray integrand = f / mu;
  if (t != 0.0) integrand *= ((mu * t).cos() + Complex(0.0, 1.0) * (mu * t).sin());
  // sum_p G(p) exp(-i p x) = sqrt(N) * forward(G)
  const double c = std::pow(2.0 * kPi, -0.5 * g.dim);
  ComplexArray out = c * g.dual_cell_volume() *
                     std::sqrt(static_cast<double>(g.size())) * fft_forward(g, integrand);
  return {g, std::move(out)};
}

Complex coherent_inner(const ComplexProfile& z1, const ComplexProfile& z2) {
  require_same_grid(z1.grid, z2.grid, "coherent_inner");
  return std::exp(sobolev_inner(z1, z2, 0.5));
}

}  // namespace nlkg
