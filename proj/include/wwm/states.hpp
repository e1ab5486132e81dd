#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wwm/grid.hpp"

namespace wwm {

// k-th normalized harmonic-oscillator eigenfunction (m = omega = 1),
// generated by the stable three-term recurrence on the normalized Hermite
// functions.  k <= 10.
WaveFunction hermite_state(int k, const SpatialGrid& grid);

// Ground state displaced by the Heisenberg operator:
//   psi(x) = (pi hbar)^{-1/4} e^{i (p0 x - p0 x0 / 2)/hbar} e^{-(x-x0)^2/(2 hbar)}
// evaluated in closed form (x0 need not be grid-commensurate), then
// renormalized on the grid.
WaveFunction coherent_state(double x0, double p0, const SpatialGrid& grid);

// Normalized coherent(alpha, 0) + e^{i phase} coherent(-alpha, 0); the
// normalization is computed numerically from the grid overlap.
WaveFunction cat_state(double alpha, double phase, const SpatialGrid& grid);

struct StateSpec {
  enum class Kind { hermite, coherent, cat, plane_wave_windowed, custom_csv };
  Kind kind = Kind::hermite;
  int index = 0;                  // hermite
  double x0 = 0.0, p0 = 0.0;      // coherent / plane wave center
  double alpha = 0.0, phase = 0.0;  // cat
  std::string path;               // custom_csv

  WaveFunction build(const SpatialGrid& grid) const;
};

// Compact text form: "hermite:k", "coherent:x0,p0", "cat:alpha,phase",
// "plane:p0", "csv:path".  Throws ConfigError on malformed input.
StateSpec parse_state_spec(std::string_view text);

// Momentum eigenstate |p0> sampled in position space,
// (2 pi hbar)^{-1/2} e^{i p0 x / hbar}; delta-normalized, not L^2-normalized.
// Used as the post-selection of the scanning-projector experiment.
WaveFunction plane_wave(double p0, const SpatialGrid& grid);

// L^2-normalized plane wave under a flat-top envelope (1 on the inner 60%
// of the grid, rolled off to zero by 90%); satisfies the boundary-decay
// invariant, so it is admissible in transform operations.
WaveFunction windowed_plane_wave(double p0, const SpatialGrid& grid);

// Pairs of catalog states used by the verification and acceptance suites.
std::vector<WaveFunction> standard_catalog(const SpatialGrid& grid);
std::vector<std::pair<WaveFunction, WaveFunction>> standard_pairs(const SpatialGrid& grid);

}  // namespace wwm
