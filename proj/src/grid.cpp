#include "nlkg/grid.hpp"

#include <cmath>

namespace nlkg {

namespace {

bool power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

}  // namespace

Grid make_grid(int dim, int n, double box_length, double mass, double coupling) {
  if (dim < 1 || dim > 3) throw std::invalid_argument("make_grid: dim must be 1, 2 or 3");
  if (!power_of_two(n) || n < 8)
    throw std::invalid_argument("make_grid: n must be a power of two >= 8");
  if (!(box_length > 0.0)) throw std::invalid_argument("make_grid: box_length must be > 0");
  if (!(mass > 0.0)) throw std::invalid_argument("make_grid: mass must be > 0");
  if (!(coupling >= 0.0)) throw std::invalid_argument("make_grid: coupling must be >= 0");
  return Grid{dim, n, box_length, mass, coupling};
}

RealArray k_squared(const Grid& g) {
  const double dk = g.dk();
  RealArray out(g.size());
  for (Eigen::Index s = 0; s < g.size(); ++s) {
    const auto c = site_coords(g, s);
    double k2 = 0.0;
    for (int a = 0; a < g.dim; ++a) {
      const double ka = dk * signed_mode(c[a], g.n);
      k2 += ka * ka;
    }
    out[s] = k2;
  }
  return out;
}

RealArray mu_values(const Grid& g) {
  return (k_squared(g) + g.mass * g.mass).sqrt();
}

RealArray mu_power_symbol(const Grid& g, double s) {
  return (k_squared(g) + g.mass * g.mass).pow(0.5 * s);
}

RealArray k_component(const Grid& g, int axis) {
  const double dk = g.dk();
  RealArray out(g.size());
  for (Eigen::Index s = 0; s < g.size(); ++s)
    out[s] = dk * signed_mode(site_coords(g, s)[axis], g.n);
  return out;
}

RealArray centered_coordinate(const Grid& g, int axis) {
  const double h = g.spacing();
  RealArray out(g.size());
  for (Eigen::Index s = 0; s < g.size(); ++s) {
    const int j = site_coords(g, s)[axis];
    out[s] = h * (j < g.n / 2 ? j : j - g.n);
  }
  return out;
}

IndexArray reflection_permutation(const Grid& g) {
  IndexArray perm(g.size());
  for (Eigen::Index s = 0; s < g.size(); ++s) {
    auto c = site_coords(g, s);
    for (int a = 0; a < g.dim; ++a) c[a] = (g.n - c[a]) % g.n;
    perm[s] = site_index(g, c);
  }
  return perm;
}

IndexArray translation_permutation(const Grid& g, const std::array<int, 3>& shift_sites) {
  IndexArray perm(g.size());
  for (Eigen::Index s = 0; s < g.size(); ++s) {
    auto c = site_coords(g, s);
    for (int a = 0; a < g.dim; ++a) {
      int j = (c[a] + shift_sites[a]) % g.n;
      if (j < 0) j += g.n;
      c[a] = j;
    }
    perm[s] = site_index(g, c);
  }
  return perm;
}

Eigen::Array<bool, Eigen::Dynamic, 1> dealias_mask(const Grid& g) {
  Eigen::Array<bool, Eigen::Dynamic, 1> keep(g.size());
  const int cut = g.n / 4;
  for (Eigen::Index s = 0; s < g.size(); ++s) {
    const auto c = site_coords(g, s);
    bool ok = true;
    for (int a = 0; a < g.dim; ++a) ok = ok && std::abs(signed_mode(c[a], g.n)) < cut;
    keep[s] = ok;
  }
  return keep;
}

double edge_max(const RealField& f) {
  const Grid& g = f.grid;
  double m = 0.0;
  for (Eigen::Index s = 0; s < g.size(); ++s) {
    const auto c = site_coords(g, s);
    bool edge = false;
    for (int a = 0; a < g.dim; ++a) edge = edge || c[a] == 0 || c[a] == g.n - 1;
    if (edge) m = std::max(m, std::abs(f.values[s]));
  }
  return m;
}

}  // namespace nlkg
