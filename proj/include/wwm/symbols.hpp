#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "wwm/phase_space.hpp"

namespace wwm {

// Finite sum  sum_t c_t x^{r_t} p^{s_t}  with distinct (r, s) keys and
// total degree r+s capped at 8 (grid-aliasing guard).
struct PolynomialSymbol {
  struct Term {
    int xpow = 0;
    int ppow = 0;
    cd coeff;
  };
  std::vector<Term> terms;

  PolynomialSymbol& add(int xpow, int ppow, cd coeff);
  int degree() const;
  bool is_real() const;
  cd eval(double x, double p) const;
};

inline constexpr int kMaxSymbolDegree = 8;

PolynomialSymbol symbol_one();
PolynomialSymbol symbol_x();
PolynomialSymbol symbol_p();
PolynomialSymbol symbol_xp();
PolynomialSymbol harmonic_symbol();                      // (x^2 + p^2)/2
PolynomialSymbol harmonic_squared_symbol();              // ((x^2 + p^2)/2)^2
PolynomialSymbol weyl_corrected_harmonic_squared(double hbar);  // H^2 - hbar^2/4

// Text form, e.g. "0.5 x^2 + 0.5 p^2" or "x p - 0.25 hbar^2"; `hbar` is
// substituted numerically.  Also accepts the named shorthands 1, x, p, xp,
// H, H2.  Throws ConfigError on malformed input, DegreeTooHigh past the cap.
PolynomialSymbol parse_symbol(std::string_view text, double hbar);
std::string to_string(const PolynomialSymbol& s);

PhaseSpaceFunction sample_symbol(const PolynomialSymbol& s, const SpatialGrid& g,
                                 const Axis& x_axis, const Axis& p_axis);
// Sampled on the Wigner lattice (the lattice phase-space averages use).
PhaseSpaceFunction sample_symbol(const PolynomialSymbol& s, const SpatialGrid& g);

// C^1 flat-top window: identically 1 for |t| <= flat, cosine roll-off to 0
// at |t| >= cut.  Used to make polynomial symbols grid-integrable without
// touching them where states live.
double flat_top_window(double t, double flat, double cut);

// Symbol sampled on the refined lattice of the operator-representation
// quadratures, multiplied by flat_top(x)*flat_top(p) windows.
PhaseSpaceFunction sample_symbol_fine(const PolynomialSymbol& s, const SpatialGrid& g,
                                      double x_flat, double x_cut, double p_flat, double p_cut);

}  // namespace wwm
