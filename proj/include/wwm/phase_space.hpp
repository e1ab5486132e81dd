#pragma once

#include <Eigen/Dense>

#include "wwm/grid.hpp"

namespace wwm {

// Uniform axis of a phase-space lattice: value(i) = origin + i*step.
struct Axis {
  double origin = 0.0;
  double step = 0.0;
  int count = 0;

  double at(int i) const { return origin + i * step; }
  bool operator==(const Axis& o) const {
    return origin == o.origin && step == o.step && count == o.count;
  }
};

enum class PhaseSpaceKind { wigner, cross_wigner, ambiguity, symbol, rho };

// Complex samples F(x_i, p_k) on a rectangular lattice; values(i, k) pairs
// row i with x_axis.at(i) and column k with p_axis.at(k).
//
// Lattices are kind-dependent.  The y-quadrature nodes y = 2m*dx of the
// (cross-)Wigner transform make the transform periodic in p with period
// (n/2)*dp, so Wigner-type functions carry a p-axis of step dp/2 covering
// +-pi*hbar/(2*dx), the unique alias-free band.  The ambiguity function is
// the symplectic Fourier image of that lattice: x step 2*dx, p step dp.
// Symbols may be sampled on either lattice or on the refined symbol lattice
// used by the operator-representation quadratures.
struct PhaseSpaceFunction {
  SpatialGrid grid;
  PhaseSpaceKind kind = PhaseSpaceKind::symbol;
  Axis x_axis;
  Axis p_axis;
  Eigen::MatrixXcd values;  // rows: x index, cols: p index

  double cell() const { return x_axis.step * p_axis.step; }
};

Axis wigner_x_axis(const SpatialGrid& g);     // n points, step dx
Axis wigner_p_axis(const SpatialGrid& g);     // n points, step dp/2
Axis ambiguity_x_axis(const SpatialGrid& g);  // n points, step 2*dx
Axis ambiguity_p_axis(const SpatialGrid& g);  // n points, step dp
Axis fine_x_axis(const SpatialGrid& g);       // 2n points, step dx/2
Axis fine_p_axis(const SpatialGrid& g);       // 2n points, step dp/2

const char* to_string(PhaseSpaceKind kind);

// sum of values * cell, row-major accumulation order (serial, documented).
cd integrate(const PhaseSpaceFunction& f);

double max_abs(const PhaseSpaceFunction& f);
double max_abs_diff(const PhaseSpaceFunction& a, const PhaseSpaceFunction& b);

}  // namespace wwm
