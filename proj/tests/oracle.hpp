// Test-only oracles, deliberately independent of the library implementation:
// closed-form state evaluators and brute-force quadrature of the defining
// integrals on refined nodes.
#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>

namespace oracle {

using cd = std::complex<double>;
using StateFn = std::function<cd(double)>;

inline constexpr double pi = std::numbers::pi;

// Physicists' Hermite polynomial by the raw three-term recurrence.
inline double hermite_poly(int k, double u) {
  double hm1 = 0.0, h = 1.0;
  for (int m = 0; m < k; ++m) {
    double next = 2.0 * u * h - 2.0 * m * hm1;
    hm1 = h;
    h = next;
  }
  return h;
}

inline double factorial(int k) {
  double f = 1.0;
  for (int m = 2; m <= k; ++m) f *= m;
  return f;
}

inline StateFn hermite_fn(int k, double hbar = 1.0) {
  double s = std::sqrt(hbar);
  double norm = 1.0 / std::sqrt(std::pow(2.0, k) * factorial(k) * std::sqrt(pi) * s);
  return [=](double x) -> cd {
    double u = x / s;
    return norm * hermite_poly(k, u) * std::exp(-0.5 * u * u);
  };
}

inline StateFn coherent_fn(double x0, double p0, double hbar = 1.0) {
  double norm = std::pow(pi * hbar, -0.25);
  return [=](double x) -> cd {
    double theta = (p0 * x - 0.5 * p0 * x0) / hbar;
    return norm * std::exp(-0.5 * (x - x0) * (x - x0) / hbar) *
           cd(std::cos(theta), std::sin(theta));
  };
}

// Riemann quadrature of int f(y) dy over [-half, half] with step dy.
inline cd quad(const std::function<cd(double)>& f, double half, double dy) {
  cd acc(0.0, 0.0);
  long long steps = static_cast<long long>(2.0 * half / dy);
  for (long long m = 0; m <= steps; ++m) {
    double y = -half + m * dy;
    acc += f(y);
  }
  return acc * dy;
}

// Cross-Wigner integral at one phase-space point, refined y nodes.
inline cd cross_wigner_at(const StateFn& psi, const StateFn& phi, double x, double p,
                          double hbar, double half, double dy) {
  return quad(
             [&](double y) {
               double theta = -p * y / hbar;
               return cd(std::cos(theta), std::sin(theta)) * psi(x + 0.5 * y) *
                      std::conj(phi(x - 0.5 * y));
             },
             half, dy) /
         (2.0 * pi * hbar);
}

// Cross-ambiguity integral at one point.
inline cd cross_ambiguity_at(const StateFn& psi, const StateFn& phi, double x, double p,
                             double hbar, double half, double dy) {
  return quad(
             [&](double y) {
               double theta = -p * y / hbar;
               return cd(std::cos(theta), std::sin(theta)) * psi(y + 0.5 * x) *
                      std::conj(phi(y - 0.5 * x));
             },
             half, dy) /
         (2.0 * pi * hbar);
}

// hbar-Fourier transform at one momentum.
inline cd fourier_at(const StateFn& psi, double p, double hbar, double half, double dy) {
  return quad(
             [&](double y) {
               double theta = -p * y / hbar;
               return cd(std::cos(theta), std::sin(theta)) * psi(y);
             },
             half, dy) /
         std::sqrt(2.0 * pi * hbar);
}

// <f|g> by quadrature.
inline cd overlap(const StateFn& f, const StateFn& g, double half, double dy) {
  return quad([&](double y) { return std::conj(f(y)) * g(y); }, half, dy);
}

}  // namespace oracle
