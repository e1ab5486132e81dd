#include "wwm/operators.hpp"

#include <cmath>
#include <vector>

namespace wwm {

namespace {

constexpr double kShiftTol = 1e-9;
constexpr double kSymbolEdgeTol = 1e-8;

long long commensurate(double value, double unit, Err err, const char* what) {
  double q = value / unit;
  long long m = std::llround(q);
  if (std::abs(q - static_cast<double>(m)) > kShiftTol)
    fail(err, std::string(what) + ": displacement is not grid-commensurate");
  return m;
}

cd cis(double theta) { return cd(std::cos(theta), std::sin(theta)); }

void require_fine_symbol(const PhaseSpaceFunction& a, const SpatialGrid& g, const char* what) {
  if (!(a.grid == g)) fail(Err::GridMismatch, std::string(what) + ": symbol grid mismatch");
  if (!(a.x_axis == fine_x_axis(g)) || !(a.p_axis == fine_p_axis(g)))
    fail(Err::KindMismatch,
         std::string(what) + ": symbol must be sampled on the refined lattice");
  // Integrability: the samples must vanish toward the x edges.
  double peak = a.values.cwiseAbs().maxCoeff();
  if (peak > 0.0) {
    double edge = std::max(a.values.row(0).cwiseAbs().maxCoeff(),
                           a.values.row(a.x_axis.count - 1).cwiseAbs().maxCoeff());
    if (edge > kSymbolEdgeTol * peak)
      fail(Err::BoundaryLeak, std::string(what) + ": symbol does not decay at the x boundary");
  }
}

}  // namespace

WaveFunction apply(const LinearOperator& op, const WaveFunction& psi) {
  if (!(op.grid == psi.grid) || psi.domain != Domain::position)
    fail(Err::GridMismatch, "apply: operator and state grids differ");
  WaveFunction out = psi;
  out.normalized = false;
  out.amp = op.m * psi.amp;
  return out;
}

LinearOperator compose(const LinearOperator& a, const LinearOperator& b) {
  if (!(a.grid == b.grid)) fail(Err::GridMismatch, "compose: operator grids differ");
  return {a.grid, false, a.m * b.m};
}

LinearOperator adjoint(const LinearOperator& op) {
  return {op.grid, op.unitary, op.m.adjoint()};
}

LinearOperator identity_operator(const SpatialGrid& grid) {
  return {grid, true, Eigen::MatrixXcd::Identity(grid.n, grid.n)};
}

double max_unitarity_defect(const LinearOperator& op) {
  Eigen::MatrixXcd d = op.m.adjoint() * op.m;
  d.diagonal().array() -= 1.0;
  return d.cwiseAbs().maxCoeff();
}

double max_hermiticity_defect(const LinearOperator& op) {
  return (op.m - op.m.adjoint().eval()).cwiseAbs().maxCoeff();
}

WaveFunction apply_heisenberg(double x0, double p0, const WaveFunction& psi) {
  const SpatialGrid& g = psi.grid;
  long long m = commensurate(x0, g.dx, Err::OffGridShift, "heisenberg");
  WaveFunction out = psi;
  out.normalized = psi.normalized;  // unitary displacement
  for (int i = 0; i < g.n; ++i) {
    double theta = (p0 * g.x(i) - 0.5 * p0 * x0) / g.hbar;
    out.amp[i] = cis(theta) * psi.amp[mod_index(i - m, g.n)];
  }
  return out;
}

LinearOperator heisenberg(double x0, double p0, const SpatialGrid& grid) {
  long long m = commensurate(x0, grid.dx, Err::OffGridShift, "heisenberg");
  LinearOperator op{grid, true, Eigen::MatrixXcd::Zero(grid.n, grid.n)};
  for (int i = 0; i < grid.n; ++i) {
    double theta = (p0 * grid.x(i) - 0.5 * p0 * x0) / grid.hbar;
    op.m(i, mod_index(i - m, grid.n)) = cis(theta);
  }
  return op;
}

LinearOperator grossmann_royer(double x0, double p0, const SpatialGrid& grid) {
  long long m2 = commensurate(x0, grid.dx / 2.0, Err::OffGridReflection, "grossmann_royer");
  LinearOperator op{grid, true, Eigen::MatrixXcd::Zero(grid.n, grid.n)};
  for (int i = 0; i < grid.n; ++i) {
    double theta = 2.0 * p0 * (grid.x(i) - x0) / grid.hbar;
    op.m(i, mod_index(m2 + grid.n - i, grid.n)) = cis(theta);
  }
  return op;
}

LinearOperator parity(const SpatialGrid& grid) { return grossmann_royer(0.0, 0.0, grid); }

PhaseSpaceFunction cross_wigner_via_gr(const WaveFunction& psi, const WaveFunction& phi) {
  require_same_grid(psi, phi, "cross_wigner_via_gr");
  const SpatialGrid& g = psi.grid;
  const int n = g.n;
  const Eigen::VectorXcd w = root_table(n);

  PhaseSpaceFunction f;
  f.grid = g;
  f.kind = &psi == &phi ? PhaseSpaceKind::wigner : PhaseSpaceKind::cross_wigner;
  f.x_axis = wigner_x_axis(g);
  f.p_axis = wigner_p_axis(g);
  f.values.resize(n, n);

  // W(x_j, p_k) = (pi hbar)^{-1} <T_GR(x_j, p_k) phi | psi>
  //            = (pi hbar)^{-1} sum_i e^{-2 i p_k (x_i - x_j)/hbar}
  //                             conj(phi(2 x_j - x_i)) psi(x_i) dx
  // with the zero-extended reflection action (points reflected off the grid
  // contribute nothing, as in the transform quadratures).
  const double pref = g.dx / (pi * g.hbar);
  std::vector<cd> q(n);
  for (int j = 0; j < n; ++j) {
    const int i_lo = std::max(0, 2 * j - (n - 1));
    const int i_hi = std::min(n - 1, 2 * j);
    for (int i = i_lo; i <= i_hi; ++i)
      q[i] = std::conj(phi.amp[2 * j - i]) * psi.amp[i];
    for (int k = 0; k < n; ++k) {
      const long long kc = k - n / 2;
      cd acc(0.0, 0.0);
      for (int i = i_lo; i <= i_hi; ++i) acc += w[mod_index(kc * (i - j), n)] * q[i];
      f.values(j, k) = pref * acc;
    }
  }
  return f;
}

LinearOperator position_operator(const SpatialGrid& grid) {
  LinearOperator op{grid, false, Eigen::MatrixXcd::Zero(grid.n, grid.n)};
  for (int j = 0; j < grid.n; ++j) op.m(j, j) = grid.x(j);
  return op;
}

LinearOperator momentum_operator(const SpatialGrid& grid) {
  const int n = grid.n;
  const Eigen::VectorXcd w = root_table(n);
  // Spectral momentum matrix: p = Finv diag(p_k) F, assembled as the exactly
  // Hermitian Toeplitz form p(i,l) = t[i-l], t[-d] = conj(t[d]).
  std::vector<cd> t(n);
  for (int d = 0; d < n; ++d) {
    cd acc(0.0, 0.0);
    for (int k = 0; k < n; ++k) {
      long long kc = k - n / 2;
      acc += grid.p(k) * w[mod_index(-kc * d, n)];
    }
    t[d] = acc / static_cast<double>(n);
  }
  LinearOperator op{grid, false, Eigen::MatrixXcd(n, n)};
  for (int i = 0; i < n; ++i) {
    op.m(i, i) = t[0];
    for (int l = 0; l < i; ++l) {
      op.m(i, l) = t[i - l];
      op.m(l, i) = std::conj(t[i - l]);
    }
  }
  return op;
}

namespace {

// H = T + T^dag filled so that H(l,i) is the bitwise conjugate of H(i,l).
Eigen::MatrixXcd hermitian_pair(const Eigen::MatrixXcd& t) {
  const int n = static_cast<int>(t.rows());
  Eigen::MatrixXcd h(n, n);
  for (int i = 0; i < n; ++i) {
    h(i, i) = t(i, i) + std::conj(t(i, i));
    for (int l = 0; l < i; ++l) {
      cd v = t(i, l) + std::conj(t(l, i));
      h(i, l) = v;
      h(l, i) = std::conj(v);
    }
  }
  return h;
}

}  // namespace

LinearOperator weyl_quantize(const PolynomialSymbol& a, const SpatialGrid& grid) {
  const int n = grid.n;
  if (a.degree() > kMaxSymbolDegree) fail(Err::DegreeTooHigh, "weyl_quantize: degree exceeds 8");

  // Dynamic-range aliasing guard: the grid cannot represent the monomial if
  // its extreme values drown double precision.
  double xmax = std::max(std::abs(grid.x(0)), std::abs(grid.x(n - 1)));
  double pmax = std::max(std::abs(grid.p(0)), std::abs(grid.p(n - 1)));
  for (const auto& term : a.terms) {
    if (std::pow(xmax, term.xpow) * std::pow(pmax, term.ppow) > 1e13)
      fail(Err::AliasedSymbol, "weyl_quantize: symbol exceeds the grid dynamic range");
  }

  int max_p = 0;
  for (const auto& term : a.terms) max_p = std::max(max_p, term.ppow);
  std::vector<Eigen::MatrixXcd> p_pow(max_p + 1);
  p_pow[0] = Eigen::MatrixXcd::Identity(n, n);
  if (max_p >= 1) p_pow[1] = momentum_operator(grid).m;
  for (int s = 2; s <= max_p; ++s) p_pow[s] = p_pow[s - 1] * p_pow[1];

  Eigen::VectorXcd x_col(n);
  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(n, n);
  for (const auto& term : a.terms) {
    const int r = term.xpow, s = term.ppow;
    for (int j = 0; j < n; ++j) x_col[j] = std::pow(grid.x(j), r);
    Eigen::MatrixXcd mono;
    if (s == 0) {
      mono = Eigen::MatrixXcd::Zero(n, n);
      for (int j = 0; j < n; ++j) mono(j, j) = x_col[j];
    } else if (r == 0) {
      mono = p_pow[s];
    } else {
      // McCoy: 2^{-s} sum_k C(s,k) p^{s-k} x^r p^k, assembled in
      // Hermitian-conjugate pairs (T_k^dag = T_{s-k}, equal binomials).
      mono = Eigen::MatrixXcd::Zero(n, n);
      const double two_s = std::ldexp(1.0, s);
      for (int k = 0; 2 * k < s; ++k) {
        double c = static_cast<double>(binomial(s, k)) / two_s;
        Eigen::MatrixXcd t = p_pow[s - k] * x_col.asDiagonal() * p_pow[k];
        mono += c * hermitian_pair(t);
      }
      if (s % 2 == 0) {
        double c = static_cast<double>(binomial(s, s / 2)) / two_s;
        Eigen::MatrixXcd t = p_pow[s / 2] * x_col.asDiagonal() * p_pow[s / 2];
        mono += (0.5 * c) * hermitian_pair(t);
      }
    }
    acc += term.coeff * mono;
  }
  return {grid, false, std::move(acc)};
}

LinearOperator projector_x(int j0, const SpatialGrid& grid) {
  if (j0 < 0 || j0 >= grid.n) fail(Err::OffGrid, "projector_x: index outside the grid");
  LinearOperator op{grid, false, Eigen::MatrixXcd::Zero(grid.n, grid.n)};
  op.m(j0, j0) = 1.0 / grid.dx;
  return op;
}

LinearOperator projector_x(double x0, const SpatialGrid& grid) {
  long long j0 = commensurate(x0 - grid.x_min, grid.dx, Err::OffGrid, "projector_x");
  if (j0 < 0 || j0 >= grid.n) fail(Err::OffGrid, "projector_x: point outside the grid");
  return projector_x(static_cast<int>(j0), grid);
}

PhaseSpaceFunction wigner_on_fine_lattice(const WaveFunction& psi, const WaveFunction& phi) {
  require_same_grid(psi, phi, "wigner_on_fine_lattice");
  require_boundary_decay(psi, "wigner_on_fine_lattice");
  require_boundary_decay(phi, "wigner_on_fine_lattice");
  const SpatialGrid& g = psi.grid;
  const int n = g.n;
  const Eigen::VectorXcd w2 = root_table(2 * n);  // w2[r] = e^{-i pi r / n}

  PhaseSpaceFunction f;
  f.grid = g;
  f.kind = PhaseSpaceKind::symbol;
  f.x_axis = fine_x_axis(g);
  f.p_axis = fine_p_axis(g);
  f.values.setZero(2 * n, 2 * n);

  // W(x0_m, pf_k) over x0 = (m - n) dx/2 via the y-sublattice of matching
  // parity; the aliased band |pf| >= pi hbar / (2 dx) stays zero.
  const double pref = g.dx / (pi * g.hbar);
  for (int m = 0; m < 2 * n; ++m) {
    const int i_lo = std::max(0, m - n + 1);
    const int i_hi = std::min(n - 1, m);
    if (i_lo > i_hi) continue;
    for (int k = n - n / 2 + 1; k < n + n / 2; ++k) {
      const long long kc = k - n;
      cd acc(0.0, 0.0);
      for (int i = i_lo; i <= i_hi; ++i)
        acc += w2[mod_index(kc * (2LL * i - m), 2 * n)] * psi.amp[i] *
               std::conj(phi.amp[m - i]);
      f.values(m, k) = pref * acc;
    }
  }
  return f;
}

LinearOperator operator_from_symbol_gr(const PhaseSpaceFunction& a, const SpatialGrid& grid) {
  require_fine_symbol(a, grid, "operator_from_symbol_gr");
  const int n = grid.n;
  const Eigen::VectorXcd w2 = root_table(2 * n);

  // A = (pi hbar)^{-1} sum_{m,k} a(x0_m, p0_k) T_GR(x0_m, p0_k) (dx/2)(dp/2);
  // T_GR(x0_m, p0_k) maps row i to column (m - i) mod n with phase
  // e^{2 i p0_k (x_i - x0_m)/hbar} = e^{i pi (k-n)(2i-m)/n}.
  LinearOperator op{grid, false, Eigen::MatrixXcd::Zero(n, n)};
  const double vol = (grid.dx / 2.0) * (grid.dp() / 2.0);
  const double pref = vol / (pi * grid.hbar);
  for (int m = 0; m < 2 * n; ++m) {
    for (int i = 0; i < n; ++i) {
      const long long d = 2LL * i - m;
      cd acc(0.0, 0.0);
      for (int k = 0; k < 2 * n; ++k)
        acc += a.values(m, k) * w2[mod_index(-(static_cast<long long>(k) - n) * d, 2 * n)];
      op.m(i, mod_index(m - i, n)) += pref * acc;
    }
  }
  return op;
}

LinearOperator operator_from_symbol_heisenberg(const PhaseSpaceFunction& a,
                                               const SpatialGrid& grid) {
  require_fine_symbol(a, grid, "operator_from_symbol_heisenberg");
  const int n = grid.n;
  const Eigen::VectorXcd w2 = root_table(2 * n);
  const double two_pi_hbar = 2.0 * pi * grid.hbar;

  // F_sigma a evaluated pointwise on the quadrature lattice x_m = grid and
  // p_nu = (nu - n) dp, the lattice exactly dual to the refined x' nodes
  // (2n momenta at dp spacing over the doubled band, so every x'-offset
  // collapses to an exact delta):
  //   C(f, m)    = sum_k a(f, k) e^{+i p0_k x_m / hbar}
  //   Fsa(m, nu) = (2 pi hbar)^{-1} (dx/2)(dp/2) sum_f e^{-i p_nu x0_f / hbar} C(f, m)
  Eigen::MatrixXcd c(2 * n, n);
  for (int f = 0; f < 2 * n; ++f) {
    for (int m = 0; m < n; ++m) {
      const long long mc = m - n / 2;
      cd acc(0.0, 0.0);
      for (int k = 0; k < 2 * n; ++k)
        acc += a.values(f, k) * w2[mod_index(-(static_cast<long long>(k) - n) * mc, 2 * n)];
      c(f, m) = acc;
    }
  }
  const double fs_pref = (grid.dx / 2.0) * (grid.dp() / 2.0) / two_pi_hbar;
  Eigen::MatrixXcd fsa(n, 2 * n);
  for (int m = 0; m < n; ++m) {
    for (int nu = 0; nu < 2 * n; ++nu) {
      const long long nc = nu - n;  // p_nu = nc * dp
      cd acc(0.0, 0.0);
      for (int f = 0; f < 2 * n; ++f)
        acc += w2[mod_index(nc * (static_cast<long long>(f) - n), 2 * n)] * c(f, m);
      fsa(m, nu) = fs_pref * acc;
    }
  }

  // A = (2 pi hbar)^{-1} sum_{m,nu} Fsa(m, nu) T(x_m, p_nu) dx dp;
  // T(x_m, p_nu) maps row i to column (i - (m - n/2)) mod n with phase
  // e^{i p_nu (x_i - x_m/2)/hbar} = e^{i pi (nu - n)(2i - m - n/2)/n}.
  LinearOperator op{grid, false, Eigen::MatrixXcd::Zero(n, n)};
  const double pref = grid.dx * grid.dp() / two_pi_hbar;
  for (int m = 0; m < n; ++m) {
    const int shift = m - n / 2;
    for (int i = 0; i < n; ++i) {
      const long long d = 2LL * i - m - n / 2;
      cd acc(0.0, 0.0);
      for (int nu = 0; nu < 2 * n; ++nu)
        acc += fsa(m, nu) * w2[mod_index(-(static_cast<long long>(nu) - n) * d, 2 * n)];
      op.m(i, mod_index(i - shift, n)) += pref * acc;
    }
  }
  return op;
}

}  // namespace wwm
