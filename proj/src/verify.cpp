#include "wwm/verify.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <sstream>

#include "wwm/io.hpp"
#include "wwm/reconstruction.hpp"
#include "wwm/states.hpp"
#include "wwm/weak_values.hpp"

namespace wwm {

VerifyOptions VerifyOptions::quick_mode() {
  VerifyOptions o;
  o.n = 64;
  o.tol_scale = 100.0;
  o.quick = true;
  return o;
}

namespace {

struct Suite {
  std::vector<CheckResult>* out;
  double scale;

  void add(const std::string& module, const std::string& name, double measured, double tol,
           const std::string& detail = "") {
    out->push_back({module, name, measured <= tol, measured, tol, detail});
  }
  void add_exact(const std::string& module, const std::string& name, bool pass,
                 const std::string& detail = "") {
    out->push_back({module, name, pass, pass ? 0.0 : 1.0, 0.0, detail});
  }
  double tol(double base) const { return base * scale; }
};

std::vector<std::pair<WaveFunction, WaveFunction>> verification_pairs(const SpatialGrid& g,
                                                                      bool quick) {
  std::vector<std::pair<WaveFunction, WaveFunction>> pairs;
  if (quick) {
    // Smaller momentum band at n = 64: keep state momenta well inside it.
    pairs.emplace_back(hermite_state(0, g), hermite_state(0, g));
    pairs.emplace_back(hermite_state(0, g), hermite_state(1, g));
    pairs.emplace_back(hermite_state(0, g), coherent_state(1.5, 0.0, g));
    pairs.emplace_back(coherent_state(1.0, 0.0, g), hermite_state(0, g));
    pairs.emplace_back(coherent_state(1.0, 1.0, g), cat_state(1.5, 0.0, g));
    return pairs;
  }
  return standard_pairs(g);
}

std::vector<WaveFunction> verification_states(const SpatialGrid& g, bool quick) {
  if (!quick) return standard_catalog(g);
  std::vector<WaveFunction> states;
  states.push_back(hermite_state(0, g));
  states.push_back(hermite_state(1, g));
  states.push_back(hermite_state(2, g));
  states.push_back(coherent_state(1.0, 0.0, g));
  states.push_back(coherent_state(1.0, 1.0, g));
  states.push_back(cat_state(1.5, 0.0, g));
  return states;
}

double sup_diff(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

void check_core_grid(Suite& s, const SpatialGrid& g, const std::vector<WaveFunction>& states) {
  double worst_rt = 0.0, worst_par = 0.0;
  for (const auto& psi : states) {
    WaveFunction back = inverse_hbar_fourier(hbar_fourier(psi));
    worst_rt = std::max(worst_rt, sup_diff(back.amp, psi.amp));
  }
  for (const auto& a : states)
    for (const auto& b : states) {
      cd direct = inner_product(a, b);
      cd trans = inner_product(hbar_fourier(a), hbar_fourier(b));
      worst_par = std::max(worst_par, std::abs(direct - trans));
    }
  s.add("core-grid", "fourier_round_trip", worst_rt, s.tol(1e-9));
  s.add("core-grid", "parseval", worst_par, s.tol(1e-9));
  s.add("core-grid", "grid_consistency", std::abs(g.dp() * g.dx * g.n - 2.0 * pi * g.hbar),
        1e-12);
}

void check_transforms(Suite& s, const SpatialGrid& g,
                      const std::vector<std::pair<WaveFunction, WaveFunction>>& pairs) {
  // Bilinearity in the first argument.
  {
    WaveFunction psi1 = hermite_state(0, g), psi2 = hermite_state(1, g);
    WaveFunction phi = coherent_state(1.0, 0.0, g);
    cd a(0.7, -0.3), b(-0.2, 0.5);
    WaveFunction mix = psi1;
    mix.amp = a * psi1.amp + b * psi2.amp;
    mix.normalized = false;
    PhaseSpaceFunction lhs = cross_wigner(mix, phi);
    PhaseSpaceFunction w1 = cross_wigner(psi1, phi);
    PhaseSpaceFunction w2 = cross_wigner(psi2, phi);
    double worst = 0.0;
    for (int i = 0; i < lhs.x_axis.count; ++i)
      for (int k = 0; k < lhs.p_axis.count; ++k)
        worst = std::max(worst,
                         std::abs(lhs.values(i, k) - a * w1.values(i, k) - b * w2.values(i, k)));
    s.add("transforms", "bilinearity", worst, s.tol(1e-12));
  }
  // Hermiticity, exact by the paired summation order.
  {
    double worst = 0.0;
    for (const auto& [psi, phi] : pairs) {
      PhaseSpaceFunction wab = cross_wigner(psi, phi);
      PhaseSpaceFunction wba = cross_wigner(phi, psi);
      worst = std::max(worst, (wab.values.conjugate() - wba.values).cwiseAbs().maxCoeff());
    }
    s.add_exact("transforms", "hermiticity_exact", worst == 0.0,
                "conj(W_ab) bit-identical to W_ba");
  }
  // Diagonal reality.
  {
    double worst = 0.0;
    for (const auto& [psi, phi] : pairs) {
      PhaseSpaceFunction w = wigner(psi);
      double rel = w.values.imag().cwiseAbs().maxCoeff() /
                   std::max(1e-300, w.values.real().cwiseAbs().maxCoeff());
      worst = std::max(worst, rel);
    }
    s.add("transforms", "diagonal_reality", worst, s.tol(1e-9));
  }
  // Moyal bridge for a in {1, x, p, H}.
  {
    std::vector<PolynomialSymbol> symbols{symbol_one(), symbol_x(), symbol_p(),
                                          harmonic_symbol()};
    std::vector<LinearOperator> quantized;
    quantized.reserve(symbols.size());
    for (const auto& sym : symbols) quantized.push_back(weyl_quantize(sym, g));
    double worst = 0.0;
    for (const auto& [psi, phi] : pairs) {
      PhaseSpaceFunction w = cross_wigner(psi, phi);
      for (size_t t = 0; t < symbols.size(); ++t) {
        cd lhs = integrate_against(symbols[t], w);
        cd rhs = inner_product(phi, apply(quantized[t], psi));
        worst = std::max(worst, std::abs(lhs - rhs));
      }
    }
    s.add("transforms", "moyal_bridge", worst, s.tol(1e-6));
  }
  // Fourier pair and involution.
  {
    double worst_pair = 0.0, worst_inv = 0.0;
    for (const auto& [psi, phi] : pairs) {
      PhaseSpaceFunction w = cross_wigner(psi, phi);
      PhaseSpaceFunction amb = cross_ambiguity(psi, phi);
      PhaseSpaceFunction fsw = symplectic_fourier(w);
      PhaseSpaceFunction back = symplectic_fourier(fsw);
      worst_pair = std::max(worst_pair, max_abs_diff(amb, fsw));
      worst_pair = std::max(worst_pair, max_abs_diff(w, symplectic_fourier(amb)));
      worst_inv = std::max(worst_inv, max_abs_diff(back, w));
    }
    s.add("transforms", "fourier_pair", worst_pair, s.tol(1e-7));
    s.add("transforms", "sft_involution", worst_inv, s.tol(1e-9));
  }
  // Superposition identity.
  {
    double worst = 0.0;
    for (const auto& [psi, phi] : pairs)
      worst = std::max(worst, superposition_identity_check(psi, phi));
    s.add("transforms", "superposition_identity", worst, s.tol(1e-10));
  }
  // Generalized marginals.
  {
    double worst = 0.0;
    for (const auto& [psi, phi] : pairs) {
      PhaseSpaceFunction w = cross_wigner(psi, phi);
      Eigen::VectorXcd mp = marginal_p(w);
      for (int j = 0; j < g.n; ++j)
        worst = std::max(worst, std::abs(mp[j] - psi.amp[j] * std::conj(phi.amp[j])));
      Eigen::VectorXcd mx = marginal_x(w);
      for (int k = 0; k < g.n; ++k) {
        double p = w.p_axis.at(k);
        cd expect = fourier_amplitude(psi, p) * std::conj(fourier_amplitude(phi, p));
        worst = std::max(worst, std::abs(mx[k] - expect));
      }
    }
    s.add("transforms", "marginals", worst, s.tol(1e-7));
  }
}

void check_operators(Suite& s, const SpatialGrid& g, const std::vector<WaveFunction>& states,
                     const std::vector<std::pair<WaveFunction, WaveFunction>>& pairs) {
  const double x0 = 16 * g.dx;
  const double p0 = 3 * g.dp();
  LinearOperator t = heisenberg(x0, p0, g);
  LinearOperator gr = grossmann_royer(3.5 * g.dx, 1.5 * g.dp(), g);
  {
    double worst = 0.0;
    for (const auto& psi : states) {
      worst = std::max(worst, std::abs(norm(apply(t, psi)) - norm(psi)));
      worst = std::max(worst, std::abs(norm(apply(gr, psi)) - norm(psi)));
    }
    s.add("operators", "displacement_unitarity", worst, s.tol(1e-10));
    s.add("operators", "unitary_flag_defect",
          std::max(max_unitarity_defect(t), max_unitarity_defect(gr)), s.tol(1e-8));
  }
  {
    Eigen::MatrixXcd sq = gr.m * gr.m;
    sq.diagonal().array() -= 1.0;
    s.add("operators", "gr_involution", sq.cwiseAbs().maxCoeff(), s.tol(1e-12));
  }
  {
    LinearOperator lhs = grossmann_royer(x0, p0, g);
    Eigen::MatrixXcd rhs = t.m * parity(g).m * t.m.adjoint();
    s.add("operators", "gr_factorization", (lhs.m - rhs).cwiseAbs().maxCoeff(), s.tol(1e-10));
  }
  {
    bool ok = true;
    for (int r = 0; r <= 3 && ok; ++r)
      for (int sp = 0; sp <= 3 && ok; ++sp) {
        auto direct = mccoy_order(r, sp).normal_form;
        auto alt = mccoy_order_x_outer_normal_form(r, sp);
        ok = direct.size() == alt.size();
        for (size_t i = 0; ok && i < direct.size(); ++i)
          ok = direct[i].xpow == alt[i].xpow && direct[i].ppow == alt[i].ppow &&
               direct[i].hbar_pow == alt[i].hbar_pow && direct[i].coeff == alt[i].coeff;
      }
    s.add_exact("operators", "mccoy_ordering_symmetry", ok,
                "p-outer and x-outer Weyl orderings share one normal form");
  }
  {
    double worst = 0.0;
    for (const auto& sym :
         {symbol_x(), symbol_p(), symbol_xp(), harmonic_symbol(), harmonic_squared_symbol()})
      worst = std::max(worst, max_hermiticity_defect(weyl_quantize(sym, g)));
    s.add("operators", "real_symbol_hermiticity", worst, s.tol(1e-8));
  }
  {
    LinearOperator h = weyl_quantize(harmonic_symbol(), g);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h.m);
    double worst = 0.0;
    for (int k = 0; k < 6; ++k) {
      double expect = g.hbar * (k + 0.5);
      worst = std::max(worst, std::abs(es.eigenvalues()[k] - expect) / expect);
    }
    s.add("operators", "spectrum_relative", worst, s.tol(1e-5));
  }
  {
    // Q(H)^2 equals Q(H^2 - hbar^2/4) on grid-resolved states (interior points).
    LinearOperator h = weyl_quantize(harmonic_symbol(), g);
    LinearOperator h2 = weyl_quantize(weyl_corrected_harmonic_squared(g.hbar), g);
    Eigen::MatrixXcd diff = h.m * h.m - h2.m;
    double worst = 0.0;
    for (const auto& psi : states) {
      Eigen::VectorXcd r = diff * psi.amp;
      for (int j = g.n / 8; j < g.n - g.n / 8; ++j) worst = std::max(worst, std::abs(r[j]));
    }
    s.add("operators", "weyl_square_symbol", worst, s.tol(1e-6));
  }
  {
    double worst = 0.0;
    for (const auto& [psi, phi] : pairs)
      worst = std::max(worst, max_abs_diff(cross_wigner_via_gr(psi, phi),
                                           cross_wigner(psi, phi)));
    s.add("operators", "gr_route_cross_wigner", worst, s.tol(1e-7));
  }
}

void check_weak_values(Suite& s, const SpatialGrid& g,
                       const std::vector<std::pair<WaveFunction, WaveFunction>>& pairs) {
  const std::vector<PolynomialSymbol> symbols{symbol_one(), symbol_x(), symbol_p(), symbol_xp(),
                                              harmonic_symbol()};
  {
    double worst = 0.0;
    for (const auto& [psi, phi] : pairs) {
      cd ov = inner_product(phi, psi);
      if (std::abs(ov) < 1e-3) continue;
      for (const auto& sym : symbols) {
        cd v[4] = {weak_value_braket(weyl_quantize(sym, g), psi, phi).value,
                   weak_value_phase_space(sym, psi, phi).value,
                   weak_value_via_gr(sym, psi, phi).value,
                   weak_value_via_heisenberg(sym, psi, phi).value};
        for (int a = 0; a < 4; ++a)
          for (int b = a + 1; b < 4; ++b) worst = std::max(worst, std::abs(v[a] - v[b]));
      }
    }
    s.add("weakvalues", "route_consistency", worst, s.tol(1e-5));
  }
  {
    double worst_im = 0.0, worst_moyal = 0.0;
    for (const auto& [psi, phi] : pairs) {
      (void)phi;
      PhaseSpaceFunction w = wigner(psi);
      for (const auto& sym : symbols) {
        WeakValueResult r = weak_value_braket(weyl_quantize(sym, g), psi, psi);
        worst_im = std::max(worst_im, std::abs(r.im()));
        worst_moyal = std::max(worst_moyal, std::abs(r.value - integrate_against(sym, w)));
      }
    }
    s.add("weakvalues", "reduction_to_expectation_imag", worst_im, s.tol(1e-9));
    s.add("weakvalues", "reduction_to_expectation_moyal", worst_moyal, s.tol(1e-6));
  }
  {
    const auto& [psi, phi] = pairs[2];
    PolynomialSymbol combo;
    cd alpha(0.6, 0.0), beta(-1.25, 0.0);
    for (const auto& t : symbol_x().terms) combo.add(t.xpow, t.ppow, alpha * t.coeff);
    for (const auto& t : harmonic_symbol().terms) combo.add(t.xpow, t.ppow, beta * t.coeff);
    cd lhs = weak_value_phase_space(combo, psi, phi).value;
    cd rhs = alpha * weak_value_phase_space(symbol_x(), psi, phi).value +
             beta * weak_value_phase_space(harmonic_symbol(), psi, phi).value;
    s.add("weakvalues", "observable_linearity", std::abs(lhs - rhs), s.tol(1e-9));
  }
  {
    WaveFunction ground = hermite_state(0, g);
    double h = g.hbar;
    double naive = weak_value_phase_space(harmonic_squared_symbol(), ground, ground).re();
    double mean = weak_value_phase_space(harmonic_symbol(), ground, ground).re();
    double discrepancy = naive - mean * mean;
    s.add("weakvalues", "weyl_scheme_negative_control",
          std::abs(discrepancy - 0.25 * h * h), s.tol(1e-6),
          "naive H^2 average reproduces the hbar^2/4 artifact");
  }
  {
    double worst_norm = 0.0, worst_marg = 0.0;
    for (const auto& [psi, phi] : pairs) {
      cd ov = inner_product(phi, psi);
      if (std::abs(ov) < 1e-3) continue;
      PhaseSpaceFunction r = rho(psi, phi);
      worst_norm = std::max(worst_norm, std::abs(integrate(r) - cd(1.0, 0.0)));
      Eigen::VectorXcd mp = marginal_p(r);
      for (int j = 0; j < g.n; ++j)
        worst_marg =
            std::max(worst_marg, std::abs(mp[j] - std::conj(phi.amp[j]) * psi.amp[j] / ov));
      Eigen::VectorXcd mx = marginal_x(r);
      for (int k = 0; k < g.n; ++k) {
        double p = r.p_axis.at(k);
        cd expect = std::conj(fourier_amplitude(phi, p)) * fourier_amplitude(psi, p) / ov;
        worst_marg = std::max(worst_marg, std::abs(mx[k] - expect));
      }
    }
    s.add("weakvalues", "rho_normalization", worst_norm, s.tol(1e-7));
    s.add("weakvalues", "rho_marginals", worst_marg, s.tol(1e-7));
  }
  {
    double worst = 0.0;
    LinearOperator x_op = weyl_quantize(symbol_x(), g);
    for (const auto& [psi, phi] : pairs) {
      cd ov = inner_product(phi, psi);
      if (std::abs(ov) < 1e-3) continue;
      auto d = superposition_decomposition(x_op, symbol_x(), psi, phi);
      worst = std::max(worst, d.residual_sq_norm);
      worst = std::max(worst, d.wigner_side_residual);
    }
    s.add("weakvalues", "superposition_decomposition", worst, s.tol(1e-9));
  }
}

void check_states(Suite& s, const SpatialGrid& g, const std::vector<WaveFunction>& states,
                  bool quick) {
  {
    double worst = 0.0;
    for (const auto& psi : states) worst = std::max(worst, boundary_ratio(psi));
    s.add("states", "boundary_decay", worst, 1e-8);
  }
  {
    LinearOperator h = weyl_quantize(harmonic_symbol(), g);
    double worst = 0.0;
    int kmax = quick ? 4 : 10;
    for (int k = 0; k <= kmax; ++k) {
      WaveFunction psi = hermite_state(k, g);
      WaveFunction hpsi = apply(h, psi);
      hpsi.amp -= g.hbar * (k + 0.5) * psi.amp;
      worst = std::max(worst, norm(hpsi));
    }
    s.add("states", "hermite_eigen_residual", worst, s.tol(1e-6));
  }
  {
    double worst = 0.0;
    int kmax = quick ? 4 : 10;
    for (int a = 0; a <= kmax; ++a) {
      WaveFunction pa = hermite_state(a, g);
      for (int b = a; b <= kmax; ++b) {
        cd ov = inner_product(pa, hermite_state(b, g));
        worst = std::max(worst, std::abs(ov - (a == b ? cd(1.0, 0.0) : cd(0.0, 0.0))));
      }
    }
    s.add("states", "hermite_orthonormality", worst, 1e-8);
  }
}

void check_reconstruction(Suite& s, const SpatialGrid& g) {
  WaveFunction psi = coherent_state(1.0, 0.5, g);
  // Coherent post-state: non-orthogonal to every auxiliary in the sweep.
  WaveFunction phi = coherent_state(1.5, 0.0, g);
  PhaseSpaceFunction w = cross_wigner(psi, phi);
  std::vector<WaveFunction> lambdas{hermite_state(0, g), coherent_state(1.0, 0.0, g),
                                    hermite_state(2, g)};
  std::vector<WaveFunction> recs;
  double worst_fid = 0.0;
  for (const auto& lambda : lambdas) {
    cd ov = inner_product(phi, lambda);
    ReconstructionReport rep = gr_reconstruct(w, lambda, ov, psi);
    worst_fid = std::max(worst_fid, 1.0 - rep.fidelity);
    recs.push_back(rep.reconstructed);
  }
  double worst_lambda = 0.0;
  for (size_t i = 1; i < recs.size(); ++i)
    worst_lambda = std::max(worst_lambda, sup_diff(recs[i].amp, recs[0].amp));
  s.add("reconstruction", "gr_fidelity", worst_fid, s.tol(1e-6));
  s.add("reconstruction", "lambda_independence", worst_lambda, s.tol(1e-5));

  {
    PhaseSpaceFunction scaled = w;
    cd c(0.3, -1.1);
    scaled.values *= c;
    ReconstructionReport base = gr_reconstruct(w, lambdas[1], inner_product(phi, lambdas[1]), psi);
    ReconstructionReport rep =
        gr_reconstruct(scaled, lambdas[1], inner_product(phi, lambdas[1]), psi);
    s.add("reconstruction", "scale_covariance",
          sup_diff(rep.reconstructed.amp, c * base.reconstructed.amp), s.tol(1e-10));
  }
  {
    ReconstructionReport rep = gr_reconstruct(w, lambdas[1], inner_product(phi, lambdas[1]), psi);
    WaveFunction rec = rep.reconstructed;
    rec.normalized = false;
    PhaseSpaceFunction w2 = cross_wigner(rec, phi);
    s.add("reconstruction", "consistency_triangle", max_abs_diff(w2, w), s.tol(1e-5));
  }
  {
    double worst = 0.0;
    WaveFunction ground = hermite_state(0, g);
    ReconstructionReport r1 = lundeen_reconstruct(make_lundeen_oracle(ground, 0.0), 0.0, g, ground);
    worst = std::max(worst, 1.0 - r1.fidelity);
    WaveFunction coh = coherent_state(1.0, 1.0, g);
    double p0 = g.p(g.n / 2 + static_cast<int>(std::round(1.0 / g.dp())));
    ReconstructionReport r2 = lundeen_reconstruct(make_lundeen_oracle(coh, p0), p0, g, coh);
    worst = std::max(worst, 1.0 - r2.fidelity);
    s.add("reconstruction", "lundeen_fidelity", worst, s.tol(1e-9));
  }
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& opt) {
  SpatialGrid g = make_grid(opt.n, opt.extent, opt.hbar);
  std::vector<CheckResult> results;
  Suite s{&results, opt.tol_scale};
  auto states = verification_states(g, opt.quick);
  auto pairs = verification_pairs(g, opt.quick);
  check_core_grid(s, g, states);
  check_transforms(s, g, pairs);
  check_operators(s, g, states, pairs);
  check_weak_values(s, g, pairs);
  check_states(s, g, states, opt.quick);
  check_reconstruction(s, g);
  return results;
}

std::string junit_report(const std::vector<CheckResult>& results) {
  int failures = 0;
  for (const auto& r : results)
    if (!r.pass) ++failures;
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<testsuite name=\"wwm-verify\" tests=\"" << results.size() << "\" failures=\""
     << failures << "\">\n";
  for (const auto& r : results) {
    os << "  <testcase classname=\"" << r.module << "\" name=\"" << r.name << "\"";
    if (r.pass) {
      os << "/>\n";
    } else {
      os << ">\n    <failure message=\"measured " << format_double(r.measured)
         << " exceeds tolerance " << format_double(r.tolerance) << "\"/>\n  </testcase>\n";
    }
  }
  os << "</testsuite>\n";
  return os.str();
}

}  // namespace wwm
