#pragma once

#include <Eigen/Dense>
#include <complex>
#include <numbers>

#include "wwm/errors.hpp"

namespace wwm {

using cd = std::complex<double>;

inline constexpr double pi = std::numbers::pi;

// Uniform spatial grid symmetric about the origin, x_j = x_min + j*dx with
// x_min = -(n/2)*dx.  The conjugate momentum grid p_k = (k - n/2)*dp with
// dp = 2*pi*hbar/(n*dx) is derived, never stored; dp() is the single
// definition everybody shares so the relation dp*dx*n = 2*pi*hbar holds in
// one fixed floating-point evaluation order.
struct SpatialGrid {
  int n = 0;
  double x_min = 0.0;
  double dx = 0.0;
  double hbar = 1.0;

  double x(int j) const { return x_min + j * dx; }
  double dp() const { return 2.0 * pi * hbar / (n * dx); }
  double p(int k) const { return (k - n / 2) * dp(); }
  double extent() const { return n * dx; }

  bool operator==(const SpatialGrid& o) const {
    return n == o.n && x_min == o.x_min && dx == o.dx && hbar == o.hbar;
  }
};

SpatialGrid make_grid(int num_points, double x_extent, double hbar);

enum class Domain { position, momentum };

// Complex amplitudes sampled on the grid.  `domain` selects which conjugate
// axis the samples live on; the quadrature weight for inner products and
// norms follows the axis (dx or dp).
struct WaveFunction {
  SpatialGrid grid;
  Domain domain = Domain::position;
  bool normalized = false;
  Eigen::VectorXcd amp;

  int size() const { return static_cast<int>(amp.size()); }
  double weight() const { return domain == Domain::position ? grid.dx : grid.dp(); }
  double axis(int j) const { return domain == Domain::position ? grid.x(j) : grid.p(j); }
};

WaveFunction make_state(const SpatialGrid& grid, Eigen::VectorXcd amplitudes,
                        Domain domain = Domain::position);

// <phi|psi> = sum_j conj(phi_j) psi_j * w, accumulated in ascending j.
cd inner_product(const WaveFunction& phi, const WaveFunction& psi);
double norm_squared(const WaveFunction& psi);
double norm(const WaveFunction& psi);
WaveFunction normalized(WaveFunction psi);

// max(|psi_0|, |psi_{n-1}|) / max_j |psi_j|
double boundary_ratio(const WaveFunction& psi);
bool boundary_decay_ok(const WaveFunction& psi, double rel_tol = 1e-8);
void require_boundary_decay(const WaveFunction& psi, const char* context);
void require_same_grid(const WaveFunction& a, const WaveFunction& b, const char* context);

// Unitary hbar-Fourier transform between the position and momentum grids.
// Forward:  psihat(p_k) = (2 pi hbar)^{-1/2} * dx * sum_j e^{-i p_k x_j / hbar} psi(x_j).
// The discrete map is exactly unitary between the dx- and dp-weighted norms.
WaveFunction hbar_fourier(const WaveFunction& psi);
WaveFunction inverse_hbar_fourier(const WaveFunction& psi_hat);

// Forward transform evaluated at an arbitrary momentum (Riemann sum at p).
cd fourier_amplitude(const WaveFunction& psi, double p);

// exp(-2*pi*i*r/n) for r in [0, n); shared phase table used by every
// transform kernel so that identical phases are bit-identical everywhere.
Eigen::VectorXcd root_table(int n);
inline int mod_index(long long r, int n) {
  long long m = r % n;
  return static_cast<int>(m < 0 ? m + n : m);
}

}  // namespace wwm
