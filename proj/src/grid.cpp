#include "wwm/grid.hpp"

#include <cmath>
#include <string>

namespace wwm {

SpatialGrid make_grid(int num_points, double x_extent, double hbar) {
  if (num_points < 8) fail(Err::InvalidGrid, "make_grid: num_points must be >= 8");
  if (num_points % 2 != 0) fail(Err::InvalidGrid, "make_grid: num_points must be even");
  if (!(x_extent > 0.0)) fail(Err::InvalidGrid, "make_grid: x_extent must be positive");
  if (!(hbar > 0.0)) fail(Err::InvalidGrid, "make_grid: hbar must be positive");
  SpatialGrid g;
  g.n = num_points;
  g.dx = x_extent / num_points;
  g.x_min = -(num_points / 2) * g.dx;
  g.hbar = hbar;
  return g;
}

WaveFunction make_state(const SpatialGrid& grid, Eigen::VectorXcd amplitudes, Domain domain) {
  if (amplitudes.size() != grid.n)
    fail(Err::InvalidGrid, "make_state: amplitude length does not match grid");
  WaveFunction psi;
  psi.grid = grid;
  psi.domain = domain;
  psi.amp = std::move(amplitudes);
  return psi;
}

void require_same_grid(const WaveFunction& a, const WaveFunction& b, const char* context) {
  if (!(a.grid == b.grid) || a.domain != b.domain)
    fail(Err::GridMismatch, std::string(context) + ": states live on different grids");
}

cd inner_product(const WaveFunction& phi, const WaveFunction& psi) {
  require_same_grid(phi, psi, "inner_product");
  cd acc(0.0, 0.0);
  for (int j = 0; j < phi.size(); ++j) acc += std::conj(phi.amp[j]) * psi.amp[j];
  return acc * phi.weight();
}

double norm_squared(const WaveFunction& psi) {
  double acc = 0.0;
  for (int j = 0; j < psi.size(); ++j) acc += std::norm(psi.amp[j]);
  return acc * psi.weight();
}

double norm(const WaveFunction& psi) { return std::sqrt(norm_squared(psi)); }

WaveFunction normalized(WaveFunction psi) {
  double n = norm(psi);
  if (n == 0.0) fail(Err::ZeroSum, "normalized: zero state");
  psi.amp /= n;
  psi.normalized = true;
  return psi;
}

double boundary_ratio(const WaveFunction& psi) {
  double peak = psi.amp.cwiseAbs().maxCoeff();
  if (peak == 0.0) return 0.0;
  double edge = std::max(std::abs(psi.amp[0]), std::abs(psi.amp[psi.size() - 1]));
  return edge / peak;
}

bool boundary_decay_ok(const WaveFunction& psi, double rel_tol) {
  return boundary_ratio(psi) <= rel_tol;
}

void require_boundary_decay(const WaveFunction& psi, const char* context) {
  if (!boundary_decay_ok(psi))
    fail(Err::BoundaryLeak, std::string(context) +
                                ": state does not decay at the grid boundary (ratio " +
                                std::to_string(boundary_ratio(psi)) + ")");
}

Eigen::VectorXcd root_table(int n) {
  Eigen::VectorXcd w(n);
  for (int r = 0; r < n; ++r) {
    double theta = -2.0 * pi * r / n;
    w[r] = cd(std::cos(theta), std::sin(theta));
  }
  return w;
}

namespace {

// Centered DFT factor shared by the forward/inverse transforms:
// out_k = scale * sum_j w[(k - n/2)(j - n/2) sign] in_j.
Eigen::VectorXcd centered_dft(const Eigen::VectorXcd& in, int sign, double scale) {
  const int n = static_cast<int>(in.size());
  const Eigen::VectorXcd w = root_table(n);
  Eigen::VectorXcd out(n);
  for (int k = 0; k < n; ++k) {
    cd acc(0.0, 0.0);
    const long long kc = k - n / 2;
    for (int j = 0; j < n; ++j) {
      acc += w[mod_index(sign * kc * (j - n / 2), n)] * in[j];
    }
    out[k] = acc * scale;
  }
  return out;
}

}  // namespace

WaveFunction hbar_fourier(const WaveFunction& psi) {
  if (psi.domain != Domain::position)
    fail(Err::GridMismatch, "hbar_fourier: input must be in the position domain");
  require_boundary_decay(psi, "hbar_fourier");
  const SpatialGrid& g = psi.grid;
  double scale = g.dx / std::sqrt(2.0 * pi * g.hbar);
  WaveFunction out;
  out.grid = g;
  out.domain = Domain::momentum;
  out.normalized = psi.normalized;
  out.amp = centered_dft(psi.amp, +1, scale);
  return out;
}

WaveFunction inverse_hbar_fourier(const WaveFunction& psi_hat) {
  if (psi_hat.domain != Domain::momentum)
    fail(Err::GridMismatch, "inverse_hbar_fourier: input must be in the momentum domain");
  const SpatialGrid& g = psi_hat.grid;
  double scale = g.dp() / std::sqrt(2.0 * pi * g.hbar);
  WaveFunction out;
  out.grid = g;
  out.domain = Domain::position;
  out.normalized = psi_hat.normalized;
  out.amp = centered_dft(psi_hat.amp, -1, scale);
  return out;
}

cd fourier_amplitude(const WaveFunction& psi, double p) {
  if (psi.domain != Domain::position)
    fail(Err::GridMismatch, "fourier_amplitude: input must be in the position domain");
  const SpatialGrid& g = psi.grid;
  cd acc(0.0, 0.0);
  for (int j = 0; j < g.n; ++j) {
    double theta = -p * g.x(j) / g.hbar;
    acc += cd(std::cos(theta), std::sin(theta)) * psi.amp[j];
  }
  return acc * g.dx / std::sqrt(2.0 * pi * g.hbar);
}

}  // namespace wwm
