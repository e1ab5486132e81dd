#include "wwm/phase_space.hpp"

namespace wwm {

Axis wigner_x_axis(const SpatialGrid& g) { return {g.x_min, g.dx, g.n}; }

Axis wigner_p_axis(const SpatialGrid& g) {
  double step = g.dp() / 2.0;
  return {-(g.n / 2) * step, step, g.n};
}

Axis ambiguity_x_axis(const SpatialGrid& g) {
  double step = 2.0 * g.dx;
  return {-(g.n / 2) * step, step, g.n};
}

Axis ambiguity_p_axis(const SpatialGrid& g) { return {-(g.n / 2) * g.dp(), g.dp(), g.n}; }

Axis fine_x_axis(const SpatialGrid& g) {
  double step = g.dx / 2.0;
  return {-g.n * step, step, 2 * g.n};
}

Axis fine_p_axis(const SpatialGrid& g) {
  double step = g.dp() / 2.0;
  return {-g.n * step, step, 2 * g.n};
}

const char* to_string(PhaseSpaceKind kind) {
  switch (kind) {
    case PhaseSpaceKind::wigner: return "wigner";
    case PhaseSpaceKind::cross_wigner: return "cross_wigner";
    case PhaseSpaceKind::ambiguity: return "ambiguity";
    case PhaseSpaceKind::symbol: return "symbol";
    case PhaseSpaceKind::rho: return "rho";
  }
  return "unknown";
}

cd integrate(const PhaseSpaceFunction& f) {
  cd acc(0.0, 0.0);
  for (int i = 0; i < f.x_axis.count; ++i)
    for (int k = 0; k < f.p_axis.count; ++k) acc += f.values(i, k);
  return acc * f.cell();
}

double max_abs(const PhaseSpaceFunction& f) { return f.values.cwiseAbs().maxCoeff(); }

double max_abs_diff(const PhaseSpaceFunction& a, const PhaseSpaceFunction& b) {
  return (a.values - b.values).cwiseAbs().maxCoeff();
}

}  // namespace wwm
