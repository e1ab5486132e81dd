#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "wwm/transforms.hpp"
#include "wwm/weak_values.hpp"

namespace wwm {

struct ReconstructionReport {
  WaveFunction reconstructed;
  double fidelity = 0.0;          // |<true|rec>| / (||true|| ||rec||)
  cd global_phase = cd(1.0, 0.0);  // phase of <true|rec>
  std::string method;
  bool up_to_constant = false;
};

double fidelity(const WaveFunction& truth, const WaveFunction& rec);

// Weak-value interface of the scanning-projector experiment: grid index of
// x0 -> weak value of the projector onto x0 with post-selection on |p0>.
// The reconstructor sees nothing else of the state.
using WeakValueOracle = std::function<cd(int)>;

// Builds the oracle from the pre-selected state; throws
// SmallMomentumAmplitude when |psihat(p0)| < 1e-8 (the k divisor).
WeakValueOracle make_lundeen_oracle(const WaveFunction& psi, double p0);

// Assembles e^{i p0 x / hbar} <Pi_x> over the grid from oracle values only,
// normalizes, and reports fidelity against `truth` (truth is used for the
// fidelity/global-phase fields of the report and nothing else).
ReconstructionReport lundeen_reconstruct(const WeakValueOracle& oracle, double p0,
                                         const SpatialGrid& grid, const WaveFunction& truth);

// psi(x) conj(phi(x_ref)) = int e^{i p (x - x_ref)/hbar} W((x + x_ref)/2, p) dp,
// evaluated for all x of the same index parity as x_ref (keeps midpoints on
// the grid).  Returns (x, value) pairs.
std::vector<std::pair<double, cd>> invert_cross_wigner(const PhaseSpaceFunction& w, int j_ref);
// Single point; throws NodeParity when (j + j_ref) is odd.
cd invert_cross_wigner_at(const PhaseSpaceFunction& w, int j, int j_ref);

// Full-grid state from the inversion formula: the x_ref-parity sublattice is
// divided by conj(phi(x_ref)), the complementary sublattice by
// conj(phi(x_ref +- dx)).  x_ref snaps to the nearest grid point.
ReconstructionReport inversion_reconstruct(const PhaseSpaceFunction& w, double x_ref,
                                           const WaveFunction& phi, const WaveFunction& truth);

// psi(x) = 2 <phi|lambda>^{-1} iint W_{psi,phi}(y,p) [T_GR(y,p) lambda](x) dy dp
// with an arbitrary auxiliary state lambda non-orthogonal to phi.  With the
// true overlap the recovery is exact (not just up to phase); without it the
// unnormalized profile is returned and the report is flagged up_to_constant.
ReconstructionReport gr_reconstruct(const PhaseSpaceFunction& w, const WaveFunction& lambda,
                                    std::optional<cd> overlap_phi_lambda,
                                    const WaveFunction& truth);

// Same, driven by rho_{phi,psi} and the overlap <phi|psi> (scales rho back
// to W and runs the identical accumulation kernel).
ReconstructionReport gr_reconstruct_from_rho(const PhaseSpaceFunction& rho_fn,
                                             cd overlap_phi_psi, const WaveFunction& lambda,
                                             std::optional<cd> overlap_phi_lambda,
                                             const WaveFunction& truth);

}  // namespace wwm
