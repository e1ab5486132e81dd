#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oracle.hpp"
#include "wwm/grid.hpp"
#include "wwm/states.hpp"

using namespace wwm;

namespace {
const SpatialGrid ref = make_grid(256, 20.0, 1.0);
}

TEST_CASE("make_grid reference configuration") {
  CHECK(ref.dx == 0.078125);
  CHECK(ref.dp() == doctest::Approx(2.0 * pi / 20.0).epsilon(1e-15));
  CHECK(ref.x_min == -10.0);
  CHECK(std::abs(ref.dp() * ref.dx * ref.n - 2.0 * pi * ref.hbar) < 1e-12);
}

TEST_CASE("make_grid small grid points") {
  SpatialGrid g = make_grid(8, 8.0, 1.0);
  for (int j = 0; j < 8; ++j) CHECK(g.x(j) == -4.0 + j);
}

TEST_CASE("make_grid hbar scales dp") {
  SpatialGrid g = make_grid(256, 20.0, 0.5);
  CHECK(g.dp() == doctest::Approx(pi / 20.0).epsilon(1e-15));
}

TEST_CASE("make_grid rejects invalid input") {
  CHECK_THROWS_AS(make_grid(4, 20.0, 1.0), Error);
  CHECK_THROWS_AS(make_grid(256, -1.0, 1.0), Error);
  CHECK_THROWS_AS(make_grid(256, 20.0, 0.0), Error);
}

TEST_CASE("inner_product normalization and orthogonality") {
  WaveFunction h0 = hermite_state(0, ref);
  WaveFunction h1 = hermite_state(1, ref);
  CHECK(std::abs(inner_product(h0, h0) - cd(1.0, 0.0)) < 1e-9);
  CHECK(std::abs(inner_product(h0, h1)) < 1e-9);
}

TEST_CASE("inner_product gaussian overlap against quadrature oracle") {
  // <coherent(2,0)|hermite(0)> = e^{-1}, frozen from the analytic overlap.
  WaveFunction coh = coherent_state(2.0, 0.0, ref);
  WaveFunction h0 = hermite_state(0, ref);
  cd got = inner_product(coh, h0);
  CHECK(std::abs(got - cd(0.36787944117144233, 0.0)) < 1e-9);
  cd oracle_value =
      oracle::overlap(oracle::coherent_fn(2.0, 0.0), oracle::hermite_fn(0), 12.0, 1e-3);
  CHECK(std::abs(got - oracle_value) < 1e-7);
}

TEST_CASE("inner_product is conjugate symmetric and grid checked") {
  WaveFunction a = coherent_state(1.0, 2.0, ref);
  WaveFunction b = hermite_state(2, ref);
  CHECK(std::abs(inner_product(a, b) - std::conj(inner_product(b, a))) < 1e-15);
  SpatialGrid other = make_grid(128, 20.0, 1.0);
  CHECK_THROWS_AS(inner_product(a, hermite_state(0, other)), Error);
}

TEST_CASE("hbar_fourier maps the ground gaussian to itself") {
  WaveFunction h0 = hermite_state(0, ref);
  WaveFunction h0_hat = hbar_fourier(h0);
  double worst = 0.0;
  for (int k = 0; k < ref.n; ++k) {
    double p = ref.p(k);
    cd expect = std::pow(pi, -0.25) * std::exp(-0.5 * p * p);
    worst = std::max(worst, std::abs(h0_hat.amp[k] - expect));
  }
  CHECK(worst < 1e-8);
}

TEST_CASE("hbar_fourier shift law") {
  // psi(x - a) has transform e^{-i p a / hbar} psihat(p).
  const double a = 16 * ref.dx;  // 1.25
  WaveFunction psi = coherent_state(0.5, 0.0, ref);
  WaveFunction shifted = psi;
  for (int j = 0; j < ref.n; ++j) {
    double x = ref.x(j) - a;
    shifted.amp[j] = std::pow(pi, -0.25) * std::exp(-0.5 * (x - 0.5) * (x - 0.5));
  }
  shifted.normalized = false;
  WaveFunction lhs = hbar_fourier(shifted);
  WaveFunction rhs = hbar_fourier(psi);
  double worst = 0.0;
  for (int k = 0; k < ref.n; ++k) {
    double theta = -ref.p(k) * a / ref.hbar;
    worst = std::max(worst,
                     std::abs(lhs.amp[k] - cd(std::cos(theta), std::sin(theta)) * rhs.amp[k]));
  }
  CHECK(worst < 1e-7);
}

TEST_CASE("hbar_fourier unitarity and round trip over the catalog") {
  for (const auto& psi : standard_catalog(ref)) {
    WaveFunction hat = hbar_fourier(psi);
    CHECK(std::abs(norm(hat) - norm(psi)) < 1e-9);
    WaveFunction back = inverse_hbar_fourier(hat);
    CHECK((back.amp - psi.amp).cwiseAbs().maxCoeff() < 1e-9);
  }
}

TEST_CASE("parseval across catalog pairs") {
  auto catalog = standard_catalog(ref);
  for (const auto& a : catalog)
    for (const auto& b : catalog) {
      cd direct = inner_product(a, b);
      cd trans = inner_product(hbar_fourier(a), hbar_fourier(b));
      CHECK(std::abs(direct - trans) < 1e-9);
    }
}

TEST_CASE("hbar_fourier rejects boundary leakage") {
  WaveFunction leak = hermite_state(0, ref);
  leak.amp[0] = 1.0;  // violates the decay invariant
  CHECK_THROWS_AS(hbar_fourier(leak), Error);
}

TEST_CASE("fourier_amplitude agrees with the quadrature oracle off the grid") {
  WaveFunction psi = coherent_state(1.0, 2.0, ref);
  double p = 1.7;  // not a grid momentum
  cd got = fourier_amplitude(psi, p);
  cd expect = oracle::fourier_at(oracle::coherent_fn(1.0, 2.0), p, 1.0, 12.0, 1e-3);
  CHECK(std::abs(got - expect) < 1e-6);
}
