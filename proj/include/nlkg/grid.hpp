// Discretization context for the periodic pseudo-spectral lattice:
// grid parameters, field value types, and the momentum-lattice helpers
// every Fourier-multiplier operator is built from.

#pragma once

#include <Eigen/Core>

#include <array>
#include <complex>
#include <cstdint>
#include <stdexcept>

namespace nlkg {

using Real = double;
using Complex = std::complex<double>;
using RealArray = Eigen::ArrayXd;
using ComplexArray = Eigen::ArrayXcd;
using IndexArray = Eigen::Array<Eigen::Index, Eigen::Dynamic, 1>;

inline constexpr double kPi = 3.14159265358979323846;

/// Periodic box [0,L)^dim sampled on n sites per axis (n a power of two).
/// Lattice spacing h = L/n; dual (momentum) lattice k in (2*pi/L)*{-n/2,..,n/2-1}
/// per axis, stored in DFT order. mass > 0 keeps mu = (-Laplace + m^2)^{1/2}
/// invertible; coupling >= 0 is the cubic coefficient lambda.
struct Grid {
  int dim = 1;
  int n = 0;
  double box_length = 0.0;
  double mass = 1.0;
  double coupling = 0.0;

  Eigen::Index size() const {
    Eigen::Index s = 1;
    for (int a = 0; a < dim; ++a) s *= n;
    return s;
  }
  double spacing() const { return box_length / n; }       // h
  double dk() const { return 2.0 * kPi / box_length; }    // momentum spacing
  double cell_volume() const {                            // h^dim
    double v = 1.0;
    for (int a = 0; a < dim; ++a) v *= spacing();
    return v;
  }
  double dual_cell_volume() const {                       // (2*pi/L)^dim
    double v = 1.0;
    for (int a = 0; a < dim; ++a) v *= dk();
    return v;
  }

  friend bool operator==(const Grid&, const Grid&) = default;
};

/// Validated constructor. Rejects dim outside {1,2,3}, non-power-of-two or
/// too-small n, non-positive box/mass, negative coupling.
Grid make_grid(int dim, int n, double box_length, double mass, double coupling);

struct RealField {
  Grid grid;
  RealArray values;
};

struct ComplexProfile {
  Grid grid;
  ComplexArray values;
};

/// Cauchy data (phi, pi) of the wave equation, both on one grid.
struct PhaseSpacePoint {
  RealField phi;
  RealField pi;
  const Grid& grid() const { return phi.grid; }
};

inline void require_same_grid(const Grid& a, const Grid& b, const char* where) {
  if (!(a == b)) throw std::invalid_argument(std::string(where) + ": grid mismatch");
}

/// Signed mode number for DFT slot j on an n-point axis: 0,1,..,n/2-1,-n/2,..,-1.
inline int signed_mode(int j, int n) { return j < n / 2 ? j : j - n; }

/// Decompose a flat row-major site index into per-axis indices.
inline std::array<int, 3> site_coords(const Grid& g, Eigen::Index site) {
  std::array<int, 3> c{0, 0, 0};
  for (int a = g.dim - 1; a >= 0; --a) {
    c[a] = static_cast<int>(site % g.n);
    site /= g.n;
  }
  return c;
}

inline Eigen::Index site_index(const Grid& g, const std::array<int, 3>& c) {
  Eigen::Index s = 0;
  for (int a = 0; a < g.dim; ++a) s = s * g.n + c[a];
  return s;
}

/// |k|^2 over the dual lattice, DFT-ordered, flattened row-major.
RealArray k_squared(const Grid& g);

/// mu(k) = sqrt(m^2 + |k|^2) over the dual lattice.
RealArray mu_values(const Grid& g);

/// (m^2 + |k|^2)^(s/2) over the dual lattice; the H^s multiplier symbol.
/// Real and even in k for every s.
RealArray mu_power_symbol(const Grid& g, double s);

/// Signed momentum component k_a at every site of the dual lattice.
RealArray k_component(const Grid& g, int axis);

/// Centered coordinate x~_a in [-L/2, L/2) at every site (axis component).
RealArray centered_coordinate(const Grid& g, int axis);

/// Site permutation x -> -x (mod L); an involution. perm[i] = index of -x_i.
IndexArray reflection_permutation(const Grid& g);

/// Site permutation for translation by an integer number of lattice sites
/// per axis: out[site(x + a)] = in[site(x)].
IndexArray translation_permutation(const Grid& g, const std::array<int, 3>& shift_sites);

/// Dealias mask for the cubic term (1/2 rule): keep |k_a| < n/4 on every axis.
Eigen::Array<bool, Eigen::Dynamic, 1> dealias_mask(const Grid& g);

/// Largest |f| over the outermost lattice shell (any axis index 0 or n-1);
/// the domain-truncation monitor for localized data.
double edge_max(const RealField& f);

}  // namespace nlkg
