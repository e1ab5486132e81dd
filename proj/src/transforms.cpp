#include "wwm/transforms.hpp"

#include <cmath>
#include <vector>

namespace wwm {

namespace {

PhaseSpaceFunction make_wigner_shell(const SpatialGrid& g, PhaseSpaceKind kind) {
  PhaseSpaceFunction f;
  f.grid = g;
  f.kind = kind;
  f.x_axis = wigner_x_axis(g);
  f.p_axis = wigner_p_axis(g);
  f.values.resize(f.x_axis.count, f.p_axis.count);
  return f;
}

}  // namespace

PhaseSpaceFunction cross_wigner(const WaveFunction& psi, const WaveFunction& phi) {
  require_same_grid(psi, phi, "cross_wigner");
  require_boundary_decay(psi, "cross_wigner");
  require_boundary_decay(phi, "cross_wigner");
  const SpatialGrid& g = psi.grid;
  const int n = g.n;
  const Eigen::VectorXcd w = root_table(n);
  const double pref = g.dx / (pi * g.hbar);  // 2*dx / (2 pi hbar)

  PhaseSpaceFunction f =
      make_wigner_shell(g, &psi == &phi ? PhaseSpaceKind::wigner : PhaseSpaceKind::cross_wigner);

  // Summation order: m = 0, then ascending m with the (+m, -m) nodes paired,
  // which makes conj(W_{psi,phi}) == W_{phi,psi} and Im W_{psi,psi} == 0
  // exact in floating point.
  std::vector<cd> up(n / 2 + 1), vm(n / 2 + 1);
  for (int j = 0; j < n; ++j) {
    const int mmax = std::min(j, n - 1 - j);
    for (int m = 1; m <= mmax; ++m) {
      up[m] = psi.amp[j + m] * std::conj(phi.amp[j - m]);
      vm[m] = psi.amp[j - m] * std::conj(phi.amp[j + m]);
    }
    const cd u0 = psi.amp[j] * std::conj(phi.amp[j]);
    for (int k = 0; k < n; ++k) {
      const long long kc = k - n / 2;
      cd acc = u0;
      for (int m = 1; m <= mmax; ++m) {
        const cd ph = w[mod_index(kc * m, n)];
        acc += ph * up[m] + std::conj(ph) * vm[m];
      }
      f.values(j, k) = pref * acc;
    }
  }
  return f;
}

PhaseSpaceFunction wigner(const WaveFunction& psi) { return cross_wigner(psi, psi); }

Eigen::VectorXcd marginal_p(const PhaseSpaceFunction& f) {
  if (f.kind != PhaseSpaceKind::wigner && f.kind != PhaseSpaceKind::cross_wigner &&
      f.kind != PhaseSpaceKind::rho)
    fail(Err::KindMismatch, "marginal_p: needs a Wigner-type function");
  Eigen::VectorXcd out(f.x_axis.count);
  for (int i = 0; i < f.x_axis.count; ++i) {
    cd acc(0.0, 0.0);
    for (int k = 0; k < f.p_axis.count; ++k) acc += f.values(i, k);
    out[i] = acc * f.p_axis.step;
  }
  return out;
}

Eigen::VectorXcd marginal_x(const PhaseSpaceFunction& f) {
  if (f.kind != PhaseSpaceKind::wigner && f.kind != PhaseSpaceKind::cross_wigner &&
      f.kind != PhaseSpaceKind::rho)
    fail(Err::KindMismatch, "marginal_x: needs a Wigner-type function");
  Eigen::VectorXcd out(f.p_axis.count);
  for (int k = 0; k < f.p_axis.count; ++k) {
    cd acc(0.0, 0.0);
    for (int i = 0; i < f.x_axis.count; ++i) acc += f.values(i, k);
    out[k] = acc * f.x_axis.step;
  }
  return out;
}

PhaseSpaceFunction symplectic_fourier(const PhaseSpaceFunction& f) {
  const SpatialGrid& g = f.grid;
  const int n = g.n;
  if (f.x_axis.count != n || f.p_axis.count != n)
    fail(Err::KindMismatch, "symplectic_fourier: needs an n-by-n lattice");
  const Eigen::VectorXcd w = root_table(n);
  const double two_pi_hbar = 2.0 * pi * g.hbar;

  PhaseSpaceFunction out;
  out.grid = g;
  switch (f.kind) {
    case PhaseSpaceKind::wigner:
    case PhaseSpaceKind::cross_wigner: out.kind = PhaseSpaceKind::ambiguity; break;
    case PhaseSpaceKind::ambiguity: out.kind = PhaseSpaceKind::cross_wigner; break;
    default: out.kind = PhaseSpaceKind::symbol; break;
  }
  const double x_out_step = two_pi_hbar / (n * f.p_axis.step);
  const double p_out_step = two_pi_hbar / (n * f.x_axis.step);
  out.x_axis = {-(n / 2) * x_out_step, x_out_step, n};
  out.p_axis = {-(n / 2) * p_out_step, p_out_step, n};
  out.values.resize(n, n);

  // out(mu, nu) = c * sum_{i,k} e^{-i p_nu x'_i / hbar} e^{+i p'_k x_mu / hbar} f(i, k);
  // both exponents reduce to 2 pi (centered index products) / n because the
  // paired axes are exactly reciprocal.  Two separable n^3 passes.
  Eigen::MatrixXcd b(n, n);  // b(nu, k) = sum_i w[(nu - n/2)(i - n/2)] f(i, k)
  for (int nu = 0; nu < n; ++nu) {
    const long long nc = nu - n / 2;
    for (int k = 0; k < n; ++k) {
      cd acc(0.0, 0.0);
      for (int i = 0; i < n; ++i) acc += w[mod_index(nc * (i - n / 2), n)] * f.values(i, k);
      b(nu, k) = acc;
    }
  }
  const double c = f.x_axis.step * f.p_axis.step / two_pi_hbar;
  for (int mu = 0; mu < n; ++mu) {
    const long long mc = mu - n / 2;
    for (int nu = 0; nu < n; ++nu) {
      cd acc(0.0, 0.0);
      for (int k = 0; k < n; ++k) acc += w[mod_index(-mc * (k - n / 2), n)] * b(nu, k);
      out.values(mu, nu) = c * acc;
    }
  }
  return out;
}

PhaseSpaceFunction cross_ambiguity(const WaveFunction& psi, const WaveFunction& phi) {
  require_same_grid(psi, phi, "cross_ambiguity");
  require_boundary_decay(psi, "cross_ambiguity");
  require_boundary_decay(phi, "cross_ambiguity");
  const SpatialGrid& g = psi.grid;
  const int n = g.n;
  const Eigen::VectorXcd w = root_table(n);

  PhaseSpaceFunction f;
  f.grid = g;
  f.kind = PhaseSpaceKind::ambiguity;
  f.x_axis = ambiguity_x_axis(g);
  f.p_axis = ambiguity_p_axis(g);
  f.values.resize(n, n);

  const double pref = g.dx / (2.0 * pi * g.hbar);
  std::vector<cd> prod(n);
  for (int mu = 0; mu < n; ++mu) {
    const int shift = mu - n / 2;  // x = 2 * shift * dx
    const int j_lo = std::max(0, std::abs(shift));
    const int j_hi = n - 1 - std::abs(shift);
    for (int j = j_lo; j <= j_hi; ++j)
      prod[j] = psi.amp[j + shift] * std::conj(phi.amp[j - shift]);
    for (int nu = 0; nu < n; ++nu) {
      const long long nc = nu - n / 2;
      cd acc(0.0, 0.0);
      for (int j = j_lo; j <= j_hi; ++j) acc += w[mod_index(nc * (j - n / 2), n)] * prod[j];
      f.values(mu, nu) = pref * acc;
    }
  }
  return f;
}

double superposition_identity_check(const WaveFunction& psi, const WaveFunction& phi) {
  require_same_grid(psi, phi, "superposition_identity_check");
  WaveFunction chi = psi;
  chi.amp = psi.amp + phi.amp;
  chi.normalized = false;
  PhaseSpaceFunction w_chi = cross_wigner(chi, chi);
  PhaseSpaceFunction w_psi = cross_wigner(psi, psi);
  PhaseSpaceFunction w_phi = cross_wigner(phi, phi);
  PhaseSpaceFunction w_cross = cross_wigner(psi, phi);
  double worst = 0.0;
  for (int i = 0; i < w_chi.x_axis.count; ++i)
    for (int k = 0; k < w_chi.p_axis.count; ++k) {
      cd r = w_chi.values(i, k) - w_phi.values(i, k) - w_psi.values(i, k) -
             2.0 * w_cross.values(i, k).real();
      worst = std::max(worst, std::abs(r));
    }
  return worst;
}

cd integrate_against(const PolynomialSymbol& a, const PhaseSpaceFunction& f) {
  cd acc(0.0, 0.0);
  for (int i = 0; i < f.x_axis.count; ++i) {
    const double x = f.x_axis.at(i);
    for (int k = 0; k < f.p_axis.count; ++k)
      acc += a.eval(x, f.p_axis.at(k)) * f.values(i, k);
  }
  return acc * f.cell();
}

}  // namespace wwm
