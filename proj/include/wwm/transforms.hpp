#pragma once

#include "wwm/phase_space.hpp"
#include "wwm/symbols.hpp"

namespace wwm {

// W_{psi,phi}(x_j, p_k) = (2 pi hbar)^{-1} * 2dx *
//     sum_m e^{-i p_k 2m dx / hbar} psi(x_{j+m}) conj(phi(x_{j-m}))
// over y-nodes y = 2m*dx; out-of-grid samples are zero.  The m-sum is
// accumulated as t_0 + sum_{m>=1} (t_m + t_{-m}) with t_{-m} formed from the
// conjugate phase, which makes conj(W_{psi,phi}) == W_{phi,psi} and the
// reality of W_{psi,psi} exact in floating point, not just to rounding.
// Result lives on the Wigner lattice (x step dx, p step dp/2).
PhaseSpaceFunction cross_wigner(const WaveFunction& psi, const WaveFunction& phi);
PhaseSpaceFunction wigner(const WaveFunction& psi);

// Generalized marginals; weight is the axis step.
//   marginal_p(W_{psi,phi})(x_j) ~= psi(x_j) conj(phi(x_j))
//   marginal_x(W_{psi,phi})(p_k) ~= psihat(p_k) conj(phihat(p_k))
Eigen::VectorXcd marginal_p(const PhaseSpaceFunction& f);
Eigen::VectorXcd marginal_x(const PhaseSpaceFunction& f);

// Symplectic Fourier transform with sigma(z, z') = p x' - p' x:
//   (F_sigma F)(x, p) = (2 pi hbar)^{-1} iint e^{-i(p x' - p' x)/hbar} F(x', p') dx' dp'.
// Maps the Wigner lattice onto the ambiguity lattice and back; involutive.
PhaseSpaceFunction symplectic_fourier(const PhaseSpaceFunction& f);

// A_{psi,phi}(x, p) = (2 pi hbar)^{-1} int e^{-i p y / hbar}
//     psi(y + x/2) conj(phi(y - x/2)) dy
// on the ambiguity lattice (x step 2*dx, p step dp); equals
// symplectic_fourier(cross_wigner(psi, phi)) identically on that lattice.
PhaseSpaceFunction cross_ambiguity(const WaveFunction& psi, const WaveFunction& phi);

// sup-norm of W_{psi+phi} - W_phi - W_psi - 2 Re W_{psi,phi}.
double superposition_identity_check(const WaveFunction& psi, const WaveFunction& phi);

// iint a(x,p) F(x,p) dx dp over F's lattice for a polynomial symbol.
cd integrate_against(const PolynomialSymbol& a, const PhaseSpaceFunction& f);

}  // namespace wwm
