#include "wwm/reconstruction.hpp"

#include <cmath>
#include <vector>

#include "wwm/states.hpp"

namespace wwm {

double fidelity(const WaveFunction& truth, const WaveFunction& rec) {
  double denom = norm(truth) * norm(rec);
  if (denom == 0.0) return 0.0;
  return std::abs(inner_product(truth, rec)) / denom;
}

namespace {

cd phase_of_overlap(const WaveFunction& truth, const WaveFunction& rec) {
  cd ov = inner_product(truth, rec);
  double a = std::abs(ov);
  return a > 0.0 ? ov / a : cd(1.0, 0.0);
}

void require_wigner_kind(const PhaseSpaceFunction& w, const char* what) {
  if (w.kind != PhaseSpaceKind::wigner && w.kind != PhaseSpaceKind::cross_wigner)
    fail(Err::KindMismatch, std::string(what) + ": needs a (cross-)Wigner function");
}

}  // namespace

WeakValueOracle make_lundeen_oracle(const WaveFunction& psi, double p0) {
  if (psi.domain != Domain::position)
    fail(Err::GridMismatch, "make_lundeen_oracle: state must be in the position domain");
  cd psihat_p0 = fourier_amplitude(psi, p0);
  if (std::abs(psihat_p0) < 1e-8)
    fail(Err::SmallMomentumAmplitude,
         "make_lundeen_oracle: |psihat(p0)| below threshold, weak values diverge");
  WaveFunction post = plane_wave(p0, psi.grid);
  SpatialGrid grid = psi.grid;
  // Each query is the braket weak value of the grid projector with
  // post-selection on |p0>; nothing else about psi escapes the closure.
  return [psi, post, grid](int j0) -> cd {
    return weak_value_braket(projector_x(j0, grid), psi, post).value;
  };
}

ReconstructionReport lundeen_reconstruct(const WeakValueOracle& oracle, double p0,
                                         const SpatialGrid& grid, const WaveFunction& truth) {
  Eigen::VectorXcd amp(grid.n);
  for (int j = 0; j < grid.n; ++j) {
    double theta = p0 * grid.x(j) / grid.hbar;
    amp[j] = cd(std::cos(theta), std::sin(theta)) * oracle(j);
  }
  // The scan determines psi up to the constant k = sqrt(2 pi hbar) psihat(p0);
  // normalizing removes it up to a global phase.
  ReconstructionReport report;
  report.method = "lundeen";
  report.reconstructed = normalized(make_state(grid, std::move(amp)));
  report.fidelity = fidelity(truth, report.reconstructed);
  report.global_phase = phase_of_overlap(truth, report.reconstructed);
  return report;
}

cd invert_cross_wigner_at(const PhaseSpaceFunction& w, int j, int j_ref) {
  require_wigner_kind(w, "invert_cross_wigner");
  const SpatialGrid& g = w.grid;
  const int n = g.n;
  if (j < 0 || j >= n || j_ref < 0 || j_ref >= n)
    fail(Err::OffGrid, "invert_cross_wigner: index outside the grid");
  if ((j + j_ref) % 2 != 0)
    fail(Err::NodeParity, "invert_cross_wigner: x and x_ref must share index parity");
  const int jc = (j + j_ref) / 2;
  const long long l = (j - j_ref) / 2;
  const Eigen::VectorXcd tab = root_table(n);
  cd acc(0.0, 0.0);
  for (int k = 0; k < n; ++k) {
    const long long kc = k - n / 2;
    acc += tab[mod_index(-kc * l, n)] * w.values(jc, k);
  }
  return acc * w.p_axis.step;
}

std::vector<std::pair<double, cd>> invert_cross_wigner(const PhaseSpaceFunction& w, int j_ref) {
  require_wigner_kind(w, "invert_cross_wigner");
  const SpatialGrid& g = w.grid;
  std::vector<std::pair<double, cd>> out;
  for (int j = j_ref % 2; j < g.n; j += 2)
    out.emplace_back(g.x(j), invert_cross_wigner_at(w, j, j_ref));
  return out;
}

ReconstructionReport inversion_reconstruct(const PhaseSpaceFunction& w, double x_ref,
                                           const WaveFunction& phi, const WaveFunction& truth) {
  require_wigner_kind(w, "inversion_reconstruct");
  if (!(phi.grid == w.grid)) fail(Err::GridMismatch, "inversion_reconstruct: grid mismatch");
  const SpatialGrid& g = w.grid;
  const int n = g.n;
  int j_ref = static_cast<int>(std::llround((x_ref - g.x_min) / g.dx));
  if (j_ref < 0 || j_ref >= n) fail(Err::OffGrid, "inversion_reconstruct: x_ref off the grid");

  const double peak = phi.amp.cwiseAbs().maxCoeff();
  // Complementary-parity reference: the neighbor of x_ref with the larger
  // post-state amplitude.
  int j_alt = j_ref + 1 < n ? j_ref + 1 : j_ref - 1;
  if (j_ref - 1 >= 0 && std::abs(phi.amp[j_ref - 1]) > std::abs(phi.amp[j_alt]))
    j_alt = j_ref - 1;
  for (int jr : {j_ref, j_alt})
    if (std::abs(phi.amp[jr]) < 1e-12 * peak)
      fail(Err::SmallMomentumAmplitude,
           "inversion_reconstruct: post-state amplitude vanishes at the reference point");

  Eigen::VectorXcd amp(n);
  for (int j = 0; j < n; ++j) {
    int jr = (j % 2 == j_ref % 2) ? j_ref : j_alt;
    amp[j] = invert_cross_wigner_at(w, j, jr) / std::conj(phi.amp[jr]);
  }
  ReconstructionReport report;
  report.method = "fourier_inversion";
  report.reconstructed = make_state(g, std::move(amp));
  report.fidelity = fidelity(truth, report.reconstructed);
  report.global_phase = phase_of_overlap(truth, report.reconstructed);
  return report;
}

ReconstructionReport gr_reconstruct(const PhaseSpaceFunction& w, const WaveFunction& lambda,
                                    std::optional<cd> overlap_phi_lambda,
                                    const WaveFunction& truth) {
  require_wigner_kind(w, "gr_reconstruct");
  if (!(lambda.grid == w.grid) || lambda.domain != Domain::position)
    fail(Err::GridMismatch, "gr_reconstruct: auxiliary state grid mismatch");
  require_boundary_decay(lambda, "gr_reconstruct");
  if (overlap_phi_lambda && std::abs(*overlap_phi_lambda) < 1e-8)
    fail(Err::OrthogonalAuxiliary,
         "gr_reconstruct: auxiliary state is orthogonal to the post-selected state");

  const SpatialGrid& g = w.grid;
  const int n = g.n;
  const Eigen::VectorXcd tab = root_table(n);

  // psi(x_i) = 2 <phi|lambda>^{-1} sum_{j,k} W(x_j, p_k)
  //            e^{2 i p_k (x_i - x_j)/hbar} lambda(2 x_j - x_i) dx dp/2,
  // with lambda zero-extended off the grid.  For each j the k-sum is an
  // n-point transform shared by all admissible i.
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(n);
  for (int j = 0; j < n; ++j) {
    const int i_lo = std::max(0, 2 * j - (n - 1));
    const int i_hi = std::min(n - 1, 2 * j);
    for (int i = i_lo; i <= i_hi; ++i) {
      const long long d = i - j;
      cd s(0.0, 0.0);
      for (int k = 0; k < n; ++k) {
        const long long kc = k - n / 2;
        s += tab[mod_index(-kc * d, n)] * w.values(j, k);
      }
      out[i] += s * lambda.amp[2 * j - i];
    }
  }
  out *= 2.0 * w.x_axis.step * w.p_axis.step;

  ReconstructionReport report;
  report.method = "gr_auxiliary";
  if (overlap_phi_lambda) {
    out /= *overlap_phi_lambda;
  } else {
    report.up_to_constant = true;
  }
  report.reconstructed = make_state(g, std::move(out));
  report.fidelity = fidelity(truth, report.reconstructed);
  report.global_phase = phase_of_overlap(truth, report.reconstructed);
  return report;
}

ReconstructionReport gr_reconstruct_from_rho(const PhaseSpaceFunction& rho_fn,
                                             cd overlap_phi_psi, const WaveFunction& lambda,
                                             std::optional<cd> overlap_phi_lambda,
                                             const WaveFunction& truth) {
  if (rho_fn.kind != PhaseSpaceKind::rho)
    fail(Err::KindMismatch, "gr_reconstruct_from_rho: needs a rho-kind function");
  PhaseSpaceFunction w = rho_fn;
  w.kind = PhaseSpaceKind::cross_wigner;
  w.values *= overlap_phi_psi;
  return gr_reconstruct(w, lambda, overlap_phi_lambda, truth);
}

}  // namespace wwm
