#include "wwm/weak_values.hpp"

#include <cmath>
#include <vector>

namespace wwm {

const char* to_string(WeakValueRoute route) {
  switch (route) {
    case WeakValueRoute::braket: return "braket";
    case WeakValueRoute::phase_space: return "phase_space";
    case WeakValueRoute::gr_operator: return "gr_operator";
    case WeakValueRoute::heisenberg: return "heisenberg";
  }
  return "unknown";
}

namespace {

cd guarded_overlap(const WaveFunction& psi, const WaveFunction& phi, bool force,
                   bool* diverged) {
  cd ov = inner_product(phi, psi);
  double threshold = kOverlapGuard * norm(phi) * norm(psi);
  if (std::abs(ov) < threshold) {
    if (!force)
      fail(Err::OrthogonalStates,
           "weak value: pre- and post-selected states are orthogonal within tolerance");
    *diverged = true;
  }
  return ov;
}

}  // namespace

cd expectation(const LinearOperator& a, const WaveFunction& psi) {
  return inner_product(psi, apply(a, psi));
}

WeakValueResult weak_value_braket(const LinearOperator& a, const WaveFunction& psi,
                                  const WaveFunction& phi, bool force) {
  require_same_grid(psi, phi, "weak_value_braket");
  WeakValueResult r;
  r.route = WeakValueRoute::braket;
  r.overlap = guarded_overlap(psi, phi, force, &r.diverged);
  r.value = inner_product(phi, apply(a, psi)) / r.overlap;
  return r;
}

WeakValueResult weak_value_phase_space(const PolynomialSymbol& a, const WaveFunction& psi,
                                       const WaveFunction& phi, bool force) {
  WeakValueResult r;
  r.route = WeakValueRoute::phase_space;
  r.overlap = guarded_overlap(psi, phi, force, &r.diverged);
  PhaseSpaceFunction w = cross_wigner(psi, phi);
  r.value = integrate_against(a, w) / r.overlap;
  return r;
}

WeakValueResult weak_value_phase_space(const PhaseSpaceFunction& a, const WaveFunction& psi,
                                       const WaveFunction& phi, bool force) {
  if (a.kind != PhaseSpaceKind::symbol)
    fail(Err::KindMismatch, "weak_value_phase_space: observable must be of kind symbol");
  WeakValueResult r;
  r.route = WeakValueRoute::phase_space;
  r.overlap = guarded_overlap(psi, phi, force, &r.diverged);
  PhaseSpaceFunction w = cross_wigner(psi, phi);
  if (!(a.x_axis == w.x_axis) || !(a.p_axis == w.p_axis))
    fail(Err::KindMismatch, "weak_value_phase_space: symbol lattice must match the Wigner lattice");
  cd acc(0.0, 0.0);
  for (int i = 0; i < w.x_axis.count; ++i)
    for (int k = 0; k < w.p_axis.count; ++k) acc += a.values(i, k) * w.values(i, k);
  r.value = acc * w.cell() / r.overlap;
  return r;
}

WeakValueResult weak_value_via_gr(const PolynomialSymbol& a, const WaveFunction& psi,
                                  const WaveFunction& phi, bool force) {
  require_same_grid(psi, phi, "weak_value_via_gr");
  WeakValueResult r;
  r.route = WeakValueRoute::gr_operator;
  r.overlap = guarded_overlap(psi, phi, force, &r.diverged);

  const SpatialGrid& g = psi.grid;
  const int n = g.n;
  const Eigen::VectorXcd w = root_table(n);
  const Axis xa = wigner_x_axis(g);
  const Axis pa = wigner_p_axis(g);

  // (pi hbar)^{-1} sum_{j,k} a(x_j, p_k) <phi|T_GR(x_j, p_k) psi> dx dp/2;
  // <phi|T_GR psi> = sum_i conj(phi_i) e^{2 i p_k (x_i - x_j)/hbar} psi(2 x_j - x_i) dx
  // with the zero-extended reflection action.
  cd total(0.0, 0.0);
  std::vector<cd> q(n);
  for (int j = 0; j < n; ++j) {
    const int i_lo = std::max(0, 2 * j - (n - 1));
    const int i_hi = std::min(n - 1, 2 * j);
    for (int i = i_lo; i <= i_hi; ++i)
      q[i] = std::conj(phi.amp[i]) * psi.amp[2 * j - i];
    const double x = xa.at(j);
    for (int k = 0; k < n; ++k) {
      const long long kc = k - n / 2;
      cd braket(0.0, 0.0);
      for (int i = i_lo; i <= i_hi; ++i) braket += w[mod_index(-kc * (i - j), n)] * q[i];
      total += a.eval(x, pa.at(k)) * braket;
    }
  }
  total *= g.dx;  // the dx in <phi|...psi>
  r.value = total * xa.step * pa.step / (pi * g.hbar) / r.overlap;
  return r;
}

WeakValueResult weak_value_via_heisenberg(const PolynomialSymbol& a, const WaveFunction& psi,
                                          const WaveFunction& phi, bool force) {
  require_same_grid(psi, phi, "weak_value_via_heisenberg");
  WeakValueResult r;
  r.route = WeakValueRoute::heisenberg;
  r.overlap = guarded_overlap(psi, phi, force, &r.diverged);

  const SpatialGrid& g = psi.grid;
  const int n = g.n;
  const Eigen::VectorXcd w = root_table(n);
  PhaseSpaceFunction fsa = symplectic_fourier(sample_symbol(a, g));

  // (2 pi hbar)^{-1} sum_{mu,nu} (F_sigma a)(x_mu, p_nu) <phi|T(x_mu, p_nu) psi> 2dx dp;
  // <phi|T psi> = sum_i conj(phi_i) e^{i(p_nu x_i - p_nu x_mu / 2)/hbar} psi(x_i - x_mu) dx
  // with the zero-extended shift action.
  cd total(0.0, 0.0);
  std::vector<cd> q(n);
  for (int mu = 0; mu < n; ++mu) {
    const int shift = 2 * (mu - n / 2);
    const int i_lo = std::max(0, shift);
    const int i_hi = std::min(n - 1, n - 1 + shift);
    for (int i = i_lo; i <= i_hi; ++i) q[i] = std::conj(phi.amp[i]) * psi.amp[i - shift];
    for (int nu = 0; nu < n; ++nu) {
      const long long nc = nu - n / 2;
      cd braket(0.0, 0.0);
      for (int i = i_lo; i <= i_hi; ++i) braket += w[mod_index(-nc * (i - mu), n)] * q[i];
      total += fsa.values(mu, nu) * braket;
    }
  }
  total *= g.dx;
  r.value = total * fsa.cell() / (2.0 * pi * g.hbar) / r.overlap;
  return r;
}

PhaseSpaceFunction rho(const WaveFunction& psi, const WaveFunction& phi, bool force) {
  bool diverged = false;
  cd ov = guarded_overlap(psi, phi, force, &diverged);
  PhaseSpaceFunction f = cross_wigner(psi, phi);
  f.kind = PhaseSpaceKind::rho;
  f.values /= ov;
  return f;
}

std::pair<double, double> pointer_statistics(const PolynomialSymbol& a, const WaveFunction& psi,
                                             const WaveFunction& phi, bool force) {
  PhaseSpaceFunction r = rho(psi, phi, force);
  double re_acc = 0.0, im_acc = 0.0;
  for (int i = 0; i < r.x_axis.count; ++i) {
    const double x = r.x_axis.at(i);
    for (int k = 0; k < r.p_axis.count; ++k) {
      cd v = a.eval(x, r.p_axis.at(k)) * r.values(i, k);
      re_acc += v.real();
      im_acc += v.imag();
    }
  }
  return {re_acc * r.cell(), im_acc * r.cell()};
}

double superposition_expectation(const LinearOperator& a, const WaveFunction& psi,
                                 const WaveFunction& phi) {
  require_same_grid(psi, phi, "superposition_expectation");
  WaveFunction chi = psi;
  chi.amp = psi.amp + phi.amp;
  chi.normalized = false;
  double nsq = norm_squared(chi);
  if (nsq < 1e-24) fail(Err::ZeroSum, "superposition_expectation: psi + phi vanishes");
  return (inner_product(chi, apply(a, chi)) / nsq).real();
}

SuperpositionDecomposition superposition_decomposition(const LinearOperator& a,
                                                       const PolynomialSymbol& a_symbol,
                                                       const WaveFunction& psi,
                                                       const WaveFunction& phi) {
  require_same_grid(psi, phi, "superposition_decomposition");
  WaveFunction chi = psi;
  chi.amp = psi.amp + phi.amp;
  chi.normalized = false;
  double nsq = norm_squared(chi);
  if (nsq < 1e-24) fail(Err::ZeroSum, "superposition_decomposition: psi + phi vanishes");

  SuperpositionDecomposition d;
  cd chi_mean = inner_product(chi, apply(a, chi));
  d.expectation = (chi_mean / nsq).real();
  double mean_phi = expectation(a, phi).real();
  double mean_psi = expectation(a, psi).real();
  double cross = inner_product(phi, apply(a, psi)).real();
  double decomposition = mean_phi + mean_psi + 2.0 * cross;
  d.residual_sq_norm = std::abs(nsq * d.expectation - decomposition);
  d.residual_first_power = std::abs(std::sqrt(nsq) * d.expectation - decomposition);

  PhaseSpaceFunction w = cross_wigner(psi, phi);
  double moyal_cross = integrate_against(a_symbol, w).real();
  d.wigner_side_residual =
      std::abs(nsq * d.expectation - (mean_phi + mean_psi + 2.0 * moyal_cross));
  return d;
}

}  // namespace wwm
