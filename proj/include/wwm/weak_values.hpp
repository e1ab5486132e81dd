#pragma once

#include <utility>

#include "wwm/operators.hpp"
#include "wwm/transforms.hpp"

namespace wwm {

enum class WeakValueRoute { braket, phase_space, gr_operator, heisenberg };
const char* to_string(WeakValueRoute route);

struct WeakValueResult {
  cd value;
  cd overlap;  // <phi|psi>
  WeakValueRoute route = WeakValueRoute::braket;
  bool diverged = false;  // set when computed under `force` below threshold

  double re() const { return value.real(); }
  double im() const { return value.imag(); }
};

// Relative orthogonality guard: |<phi|psi>| >= 1e-8 * ||phi|| ||psi||.
inline constexpr double kOverlapGuard = 1e-8;

cd expectation(const LinearOperator& a, const WaveFunction& psi);

// <A>_{phi,psi} = <phi|A|psi> / <phi|psi>.
WeakValueResult weak_value_braket(const LinearOperator& a, const WaveFunction& psi,
                                  const WaveFunction& phi, bool force = false);

// <phi|psi>^{-1} iint a(x,p) W_{psi,phi}(x,p) dx dp  (Weyl symbols only).
WeakValueResult weak_value_phase_space(const PolynomialSymbol& a, const WaveFunction& psi,
                                       const WaveFunction& phi, bool force = false);
// Same with a pre-sampled symbol on the Wigner lattice.
WeakValueResult weak_value_phase_space(const PhaseSpaceFunction& a, const WaveFunction& psi,
                                       const WaveFunction& phi, bool force = false);

// (pi hbar)^{-1} iint a(z) <T_GR(z)>_{phi,psi} dz  over the Wigner lattice.
WeakValueResult weak_value_via_gr(const PolynomialSymbol& a, const WaveFunction& psi,
                                  const WaveFunction& phi, bool force = false);

// (2 pi hbar)^{-1} iint (F_sigma a)(z) <T(z)>_{phi,psi} dz  over the
// ambiguity lattice, with F_sigma a the exact lattice transform of the
// Wigner-lattice samples of a.
WeakValueResult weak_value_via_heisenberg(const PolynomialSymbol& a, const WaveFunction& psi,
                                          const WaveFunction& phi, bool force = false);

// rho_{phi,psi} = W_{psi,phi} / <phi|psi>; integrates to 1.
PhaseSpaceFunction rho(const WaveFunction& psi, const WaveFunction& phi, bool force = false);

// (iint Re(a rho), iint Im(a rho)): pointer reading and conjugate shift.
std::pair<double, double> pointer_statistics(const PolynomialSymbol& a, const WaveFunction& psi,
                                             const WaveFunction& phi, bool force = false);

// <A>_{psi+phi} = <psi+phi|A|psi+phi> / ||psi+phi||^2.
double superposition_expectation(const LinearOperator& a, const WaveFunction& psi,
                                 const WaveFunction& phi);

struct SuperpositionDecomposition {
  double expectation = 0;         // <A>_{psi+phi}
  double residual_sq_norm = 0;    // |N^2 <A>_{psi+phi} - (<A>_phi + <A>_psi + 2 Re<phi|A|psi>)|
  double residual_first_power = 0;  // same with N^1 in place of N^2 (diagnostic)
  double wigner_side_residual = 0;  // replaces Re<phi|A|psi> by iint a Re W_{psi,phi}
};

// Decomposition residuals of the superposition identity; the squared-norm
// form is the verified identity, the first-power form is diagnostic only.
SuperpositionDecomposition superposition_decomposition(const LinearOperator& a,
                                                       const PolynomialSymbol& a_symbol,
                                                       const WaveFunction& psi,
                                                       const WaveFunction& phi);

}  // namespace wwm
