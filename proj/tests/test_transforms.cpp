#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oracle.hpp"
#include "wwm/states.hpp"
#include "wwm/transforms.hpp"
#include "wwm/weak_values.hpp"

using namespace wwm;

namespace {
const SpatialGrid ref = make_grid(256, 20.0, 1.0);

PhaseSpaceFunction ground_wigner() { return wigner(hermite_state(0, ref)); }
}  // namespace

TEST_CASE("wigner of the ground state is the analytic gaussian") {
  PhaseSpaceFunction w = ground_wigner();
  double worst = 0.0;
  for (int j = 0; j < w.x_axis.count; ++j) {
    double x = w.x_axis.at(j);
    for (int k = 0; k < w.p_axis.count; ++k) {
      double p = w.p_axis.at(k);
      worst = std::max(worst,
                       std::abs(w.values(j, k) - std::exp(-(x * x + p * p)) / pi));
    }
  }
  CHECK(worst < 1e-7);
  CHECK(w.values(ref.n / 2, ref.n / 2).real() == doctest::Approx(1.0 / pi).epsilon(1e-10));
}

TEST_CASE("wigner integrates to one and is real") {
  for (const auto& psi : standard_catalog(ref)) {
    PhaseSpaceFunction w = wigner(psi);
    CHECK(std::abs(integrate(w) - cd(1.0, 0.0)) < 1e-7);
    CHECK(w.values.imag().cwiseAbs().maxCoeff() == 0.0);  // exact by pairing
  }
}

TEST_CASE("hermite(1) wigner is negative at the origin") {
  PhaseSpaceFunction w = wigner(hermite_state(1, ref));
  CHECK(w.values(ref.n / 2, ref.n / 2).real() == doctest::Approx(-1.0 / pi).epsilon(1e-9));
}

TEST_CASE("cross-wigner against the refined quadrature oracle") {
  WaveFunction h0 = hermite_state(0, ref);
  WaveFunction h1 = hermite_state(1, ref);
  PhaseSpaceFunction w = cross_wigner(h1, h0);
  auto f1 = oracle::hermite_fn(1);
  auto f0 = oracle::hermite_fn(0);
  // Spot values on and off the axes, y-step dx/10.
  for (auto [j, k] : {std::pair{128, 128}, {140, 100}, {100, 150}, {128, 96}}) {
    cd expect =
        oracle::cross_wigner_at(f1, f0, w.x_axis.at(j), w.p_axis.at(k), 1.0, 20.0, ref.dx / 10);
    CHECK(std::abs(w.values(j, k) - expect) < 1e-7);
  }
}

TEST_CASE("cross-wigner hermiticity is exact") {
  WaveFunction a = coherent_state(1.0, 2.0, ref);
  WaveFunction b = cat_state(2.0, 0.0, ref);
  PhaseSpaceFunction wab = cross_wigner(a, b);
  PhaseSpaceFunction wba = cross_wigner(b, a);
  CHECK((wab.values.conjugate() - wba.values).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("cross-wigner rejects mismatched grids and boundary leaks") {
  WaveFunction a = hermite_state(0, ref);
  WaveFunction b = hermite_state(0, make_grid(128, 20.0, 1.0));
  CHECK_THROWS_AS(cross_wigner(a, b), Error);
  WaveFunction leak = plane_wave(0.0, ref);
  CHECK_THROWS_AS(cross_wigner(a, leak), Error);
}

TEST_CASE("generalized marginals reproduce the state products") {
  for (const auto& [psi, phi] : standard_pairs(ref)) {
    PhaseSpaceFunction w = cross_wigner(psi, phi);
    Eigen::VectorXcd mp = marginal_p(w);
    double worst = 0.0;
    for (int j = 0; j < ref.n; ++j)
      worst = std::max(worst, std::abs(mp[j] - psi.amp[j] * std::conj(phi.amp[j])));
    CHECK(worst < 1e-7);

    Eigen::VectorXcd mx = marginal_x(w);
    worst = 0.0;
    for (int k = 0; k < w.p_axis.count; ++k) {
      double p = w.p_axis.at(k);
      worst = std::max(worst, std::abs(mx[k] - fourier_amplitude(psi, p) *
                                                   std::conj(fourier_amplitude(phi, p))));
    }
    CHECK(worst < 1e-7);
  }
}

TEST_CASE("marginal integrals give the overlap") {
  WaveFunction h0 = hermite_state(0, ref);
  WaveFunction h1 = hermite_state(1, ref);
  PhaseSpaceFunction w01 = cross_wigner(h0, h1);
  CHECK(std::abs(integrate(w01)) < 1e-8);  // orthogonal pair

  WaveFunction coh = coherent_state(1.0, 0.0, ref);
  PhaseSpaceFunction w = cross_wigner(coh, h0);
  // integral = <h0|coh> = e^{-1/4}, real positive for p0 = 0.
  CHECK(std::abs(integrate(w) - cd(0.77880078307140487, 0.0)) < 1e-7);
}

TEST_CASE("marginals reject non-wigner kinds") {
  WaveFunction h0 = hermite_state(0, ref);
  PhaseSpaceFunction amb = cross_ambiguity(h0, h0);
  CHECK_THROWS_AS(marginal_p(amb), Error);
}

TEST_CASE("symplectic fourier maps wigner to ambiguity and is involutive") {
  WaveFunction h0 = hermite_state(0, ref);
  PhaseSpaceFunction w = wigner(h0);
  PhaseSpaceFunction amb = cross_ambiguity(h0, h0);
  PhaseSpaceFunction fsw = symplectic_fourier(w);

  CHECK(fsw.kind == PhaseSpaceKind::ambiguity);
  CHECK(fsw.x_axis.step == doctest::Approx(2.0 * ref.dx).epsilon(1e-15));
  CHECK(fsw.p_axis.step == doctest::Approx(ref.dp()).epsilon(1e-15));
  CHECK(max_abs_diff(fsw, amb) < 1e-7);

  // The ambiguity of the ground state is e^{-(x^2+p^2)/4} / (2 pi).
  double worst = 0.0;
  for (int mu = 0; mu < amb.x_axis.count; ++mu) {
    double x = amb.x_axis.at(mu);
    for (int nu = 0; nu < amb.p_axis.count; ++nu) {
      double p = amb.p_axis.at(nu);
      worst = std::max(worst, std::abs(fsw.values(mu, nu) -
                                       std::exp(-(x * x + p * p) / 4.0) / (2.0 * pi)));
    }
  }
  CHECK(worst < 1e-7);

  PhaseSpaceFunction back = symplectic_fourier(fsw);
  CHECK(back.kind == PhaseSpaceKind::cross_wigner);
  CHECK(max_abs_diff(back, w) < 1e-9);
}

TEST_CASE("symplectic fourier of zero is zero") {
  PhaseSpaceFunction z = ground_wigner();
  z.values.setZero();
  CHECK(max_abs(symplectic_fourier(z)) == 0.0);
}

TEST_CASE("cross-ambiguity at the origin is the squared norm over 2 pi hbar") {
  for (const auto& psi : standard_catalog(ref)) {
    PhaseSpaceFunction amb = cross_ambiguity(psi, psi);
    CHECK(std::abs(amb.values(ref.n / 2, ref.n / 2) - cd(1.0 / (2.0 * pi), 0.0)) < 1e-12);
  }
}

TEST_CASE("cross-ambiguity dual route: quadrature vs heisenberg matrix elements") {
  WaveFunction h0 = hermite_state(0, ref);
  WaveFunction h1 = hermite_state(1, ref);
  PhaseSpaceFunction amb = cross_ambiguity(h0, h1);

  // Zero-extended matrix-element route on every lattice point.
  double worst = 0.0;
  for (int mu = 0; mu < amb.x_axis.count; ++mu) {
    const int shift = 2 * (mu - ref.n / 2);
    const double x0 = amb.x_axis.at(mu);
    for (int nu = 0; nu < amb.p_axis.count; nu += 3) {
      const double p0 = amb.p_axis.at(nu);
      cd braket(0.0, 0.0);
      for (int i = std::max(0, shift); i < std::min(ref.n, ref.n + shift); ++i) {
        double theta = (p0 * ref.x(i) - 0.5 * p0 * x0) / ref.hbar;
        braket += std::conj(cd(std::cos(theta), std::sin(theta)) * h1.amp[i - shift]) *
                  h0.amp[i];
      }
      cd route = braket * ref.dx / (2.0 * pi * ref.hbar);
      worst = std::max(worst, std::abs(amb.values(mu, nu) - route));
    }
  }
  CHECK(worst < 1e-7);

  // Cyclic operator route agrees within the displacement decay margin.
  worst = 0.0;
  for (int mu = 52; mu <= 204; mu += 4) {
    double x0 = amb.x_axis.at(mu);
    for (int nu = 0; nu < amb.p_axis.count; nu += 4) {
      WaveFunction shifted = apply_heisenberg(x0, amb.p_axis.at(nu), h1);
      cd route = inner_product(shifted, h0) / (2.0 * pi * ref.hbar);
      worst = std::max(worst, std::abs(amb.values(mu, nu) - route));
    }
  }
  CHECK(worst < 1e-7);
}

TEST_CASE("cross-ambiguity against the refined quadrature oracle") {
  WaveFunction a = coherent_state(1.0, 0.0, ref);
  WaveFunction b = hermite_state(0, ref);
  PhaseSpaceFunction amb = cross_ambiguity(a, b);
  auto fa = oracle::coherent_fn(1.0, 0.0);
  auto fb = oracle::hermite_fn(0);
  for (auto [mu, nu] : {std::pair{128, 128}, {130, 120}, {120, 140}}) {
    cd expect = oracle::cross_ambiguity_at(fa, fb, amb.x_axis.at(mu), amb.p_axis.at(nu), 1.0,
                                           12.0, ref.dx / 10);
    CHECK(std::abs(amb.values(mu, nu) - expect) < 1e-7);
  }
}

TEST_CASE("superposition identity") {
  WaveFunction h0 = hermite_state(0, ref);
  CHECK(superposition_identity_check(h0, hermite_state(1, ref)) < 1e-10);
  CHECK(superposition_identity_check(h0, h0) < 1e-10);
  CHECK(superposition_identity_check(h0, coherent_state(3.0, 0.0, ref)) < 1e-10);
}

TEST_CASE("cross-wigner bilinearity") {
  WaveFunction h0 = hermite_state(0, ref);
  WaveFunction h2 = hermite_state(2, ref);
  WaveFunction phi = coherent_state(1.0, 1.0, ref);
  cd a(0.3, 0.7), b(-1.1, 0.2);
  WaveFunction mix = h0;
  mix.amp = a * h0.amp + b * h2.amp;
  mix.normalized = false;
  PhaseSpaceFunction lhs = cross_wigner(mix, phi);
  PhaseSpaceFunction w0 = cross_wigner(h0, phi);
  PhaseSpaceFunction w2 = cross_wigner(h2, phi);
  double worst = 0.0;
  for (int j = 0; j < ref.n; ++j)
    for (int k = 0; k < ref.n; ++k)
      worst = std::max(worst,
                       std::abs(lhs.values(j, k) - a * w0.values(j, k) - b * w2.values(j, k)));
  CHECK(worst < 1e-12);
}

TEST_CASE("moyal bridge against quantized operators") {
  LinearOperator x_op = weyl_quantize(symbol_x(), ref);
  LinearOperator p_op = weyl_quantize(symbol_p(), ref);
  LinearOperator h_op = weyl_quantize(harmonic_symbol(), ref);
  for (const auto& [psi, phi] : standard_pairs(ref)) {
    PhaseSpaceFunction w = cross_wigner(psi, phi);
    CHECK(std::abs(integrate_against(symbol_one(), w) - inner_product(phi, psi)) < 1e-6);
    CHECK(std::abs(integrate_against(symbol_x(), w) - inner_product(phi, apply(x_op, psi))) <
          1e-6);
    CHECK(std::abs(integrate_against(symbol_p(), w) - inner_product(phi, apply(p_op, psi))) <
          1e-6);
    CHECK(std::abs(integrate_against(harmonic_symbol(), w) -
                   inner_product(phi, apply(h_op, psi))) < 1e-6);
  }
}
