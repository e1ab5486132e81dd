#pragma once

#include "wwm/mccoy.hpp"
#include "wwm/phase_space.hpp"
#include "wwm/symbols.hpp"

namespace wwm {

// Dense operator on amplitude vectors: (A psi)_j = sum_k m(j,k) psi_k.
// Integral-kernel operators fold the quadrature weight into m.
struct LinearOperator {
  SpatialGrid grid;
  bool unitary = false;
  Eigen::MatrixXcd m;
};

WaveFunction apply(const LinearOperator& op, const WaveFunction& psi);
LinearOperator compose(const LinearOperator& a, const LinearOperator& b);  // a*b
LinearOperator adjoint(const LinearOperator& op);
LinearOperator identity_operator(const SpatialGrid& grid);

double max_unitarity_defect(const LinearOperator& op);    // ||m^dag m - I||_max
double max_hermiticity_defect(const LinearOperator& op);  // ||m - m^dag||_max

// Heisenberg displacement, (T psi)(x) = e^{i(p0 x - p0 x0/2)/hbar} psi(x - x0).
// x0 must be a multiple of dx; the shift wraps cyclically, which keeps the
// matrix exactly unitary (boundary-decayed states never see the wrap).
LinearOperator heisenberg(double x0, double p0, const SpatialGrid& grid);
WaveFunction apply_heisenberg(double x0, double p0, const WaveFunction& psi);

// Grossmann-Royer reflection, (T_GR psi)(x) = e^{2i p0 (x - x0)/hbar} psi(2 x0 - x).
// x0 must be a multiple of dx/2 so 2 x0 - x_j lands on the grid.
LinearOperator grossmann_royer(double x0, double p0, const SpatialGrid& grid);
LinearOperator parity(const SpatialGrid& grid);  // psi(x) -> psi(-x)

// W(x_j, p_k) = (pi hbar)^{-1} <T_GR(x_j, p_k) phi | psi> on the Wigner
// lattice; an independent route to the cross-Wigner transform.
PhaseSpaceFunction cross_wigner_via_gr(const WaveFunction& psi, const WaveFunction& phi);

// xhat = multiplication by x_j; phat realized spectrally (conjugation of the
// momentum multiplier by the hbar-Fourier transform), assembled as an
// exactly Hermitian Toeplitz matrix.
LinearOperator position_operator(const SpatialGrid& grid);
LinearOperator momentum_operator(const SpatialGrid& grid);

// Weyl quantization of a polynomial symbol, term by term via the McCoy rule.
// Summands are assembled in Hermitian-conjugate pairs, so real symbols give
// exactly Hermitian matrices.
LinearOperator weyl_quantize(const PolynomialSymbol& a, const SpatialGrid& grid);

// Projection onto the grid point x_{j0}: (P psi)_j = delta_{j j0} psi_{j0}/dx,
// so <phi|P|psi> = conj(phi(x0)) psi(x0) under the dx-weighted inner product.
LinearOperator projector_x(int j0, const SpatialGrid& grid);
LinearOperator projector_x(double x0, const SpatialGrid& grid);  // OffGrid unless x0 on grid

// Operator representations by phase-space quadrature.  The symbol must be
// sampled on the refined lattice (fine_x_axis / fine_p_axis); x-boundary
// decay of the samples is required (BoundaryLeak otherwise).
//   A = (pi hbar)^{-1}  iint a(x,p) T_GR(x,p) dx dp
LinearOperator operator_from_symbol_gr(const PhaseSpaceFunction& a, const SpatialGrid& grid);
//   A = (2 pi hbar)^{-1} iint (F_sigma a)(x,p) T(x,p) dx dp,
// with F_sigma a evaluated pointwise from the refined samples.
LinearOperator operator_from_symbol_heisenberg(const PhaseSpaceFunction& a,
                                               const SpatialGrid& grid);

// Cross-Wigner transform sampled on the refined symbol lattice (x step dx/2
// via the odd/even y-sublattices, p step dp/2 with the alias band outside
// +-pi*hbar/(2dx) set to zero).  Feeds the representations above.
PhaseSpaceFunction wigner_on_fine_lattice(const WaveFunction& psi, const WaveFunction& phi);

}  // namespace wwm
