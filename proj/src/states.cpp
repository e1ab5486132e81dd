#include "wwm/states.hpp"

#include <cmath>
#include <cstdlib>

#include "wwm/io.hpp"
#include "wwm/symbols.hpp"

namespace wwm {

namespace {

constexpr int kMaxHermiteIndex = 10;

void require_center_margin(double x0, double p0, const SpatialGrid& g, const char* what) {
  const double x_margin = 0.6 * (g.extent() / 2.0);
  // Wigner-lattice momentum band is +-pi*hbar/(2*dx); same 60% margin.
  const double p_margin = 0.6 * (pi * g.hbar / (2.0 * g.dx));
  if (std::abs(x0) > x_margin || std::abs(p0) > p_margin)
    fail(Err::CenterTooFarOut, std::string(what) + ": center violates the decay margin");
}

}  // namespace

WaveFunction hermite_state(int k, const SpatialGrid& grid) {
  if (k < 0 || k > kMaxHermiteIndex) fail(Err::IndexTooHigh, "hermite_state: index out of range");
  const int n = grid.n;
  const double s = std::sqrt(grid.hbar);
  Eigen::VectorXd prev(n), cur(n);
  for (int j = 0; j < n; ++j) {
    double u = grid.x(j) / s;
    cur[j] = std::pow(pi, -0.25) * std::exp(-0.5 * u * u);
  }
  prev.setZero();
  for (int m = 0; m < k; ++m) {
    // phi_{m+1}(u) = sqrt(2/(m+1)) u phi_m(u) - sqrt(m/(m+1)) phi_{m-1}(u)
    const double a = std::sqrt(2.0 / (m + 1));
    const double b = std::sqrt(static_cast<double>(m) / (m + 1));
    for (int j = 0; j < n; ++j) {
      double u = grid.x(j) / s;
      double next = a * u * cur[j] - b * prev[j];
      prev[j] = cur[j];
      cur[j] = next;
    }
  }
  Eigen::VectorXcd amp(n);
  const double scale = 1.0 / std::sqrt(s);  // phi_k(x/s)/sqrt(s) keeps the L^2 norm
  for (int j = 0; j < n; ++j) amp[j] = cd(cur[j] * scale, 0.0);
  return normalized(make_state(grid, std::move(amp)));
}

WaveFunction coherent_state(double x0, double p0, const SpatialGrid& grid) {
  require_center_margin(x0, p0, grid, "coherent_state");
  const int n = grid.n;
  const double h = grid.hbar;
  Eigen::VectorXcd amp(n);
  const double norm0 = std::pow(pi * h, -0.25);
  for (int j = 0; j < n; ++j) {
    double x = grid.x(j);
    double theta = (p0 * x - 0.5 * p0 * x0) / h;
    double gauss = norm0 * std::exp(-0.5 * (x - x0) * (x - x0) / h);
    amp[j] = cd(std::cos(theta), std::sin(theta)) * gauss;
  }
  return normalized(make_state(grid, std::move(amp)));
}

WaveFunction cat_state(double alpha, double phase, const SpatialGrid& grid) {
  const double x_margin = 0.6 * (grid.extent() / 2.0);
  if (2.0 * std::abs(alpha) > x_margin + 1e-12)
    fail(Err::CenterTooFarOut, "cat_state: separation violates the decay margin");
  WaveFunction plus = coherent_state(alpha, 0.0, grid);
  WaveFunction minus = coherent_state(-alpha, 0.0, grid);
  WaveFunction cat = plus;
  cat.amp = plus.amp + cd(std::cos(phase), std::sin(phase)) * minus.amp;
  cat.normalized = false;
  return normalized(std::move(cat));
}

WaveFunction plane_wave(double p0, const SpatialGrid& grid) {
  Eigen::VectorXcd amp(grid.n);
  const double scale = 1.0 / std::sqrt(2.0 * pi * grid.hbar);
  for (int j = 0; j < grid.n; ++j) {
    double theta = p0 * grid.x(j) / grid.hbar;
    amp[j] = scale * cd(std::cos(theta), std::sin(theta));
  }
  return make_state(grid, std::move(amp));
}

WaveFunction windowed_plane_wave(double p0, const SpatialGrid& grid) {
  const double half = grid.extent() / 2.0;
  Eigen::VectorXcd amp(grid.n);
  for (int j = 0; j < grid.n; ++j) {
    double x = grid.x(j);
    double theta = p0 * x / grid.hbar;
    amp[j] = flat_top_window(x, 0.6 * half, 0.9 * half) * cd(std::cos(theta), std::sin(theta));
  }
  return normalized(make_state(grid, std::move(amp)));
}

WaveFunction StateSpec::build(const SpatialGrid& grid) const {
  switch (kind) {
    case Kind::hermite: return hermite_state(index, grid);
    case Kind::coherent: return coherent_state(x0, p0, grid);
    case Kind::cat: return cat_state(alpha, phase, grid);
    case Kind::plane_wave_windowed: return windowed_plane_wave(p0, grid);
    case Kind::custom_csv: return load_wavefunction_csv(path, grid);
  }
  fail(Err::ConfigError, "StateSpec: unknown kind");
}

StateSpec parse_state_spec(std::string_view text) {
  auto colon = text.find(':');
  std::string head(text.substr(0, colon));
  std::string args(colon == std::string_view::npos ? "" : text.substr(colon + 1));

  auto split_args = [&](size_t expect) {
    std::vector<double> vals;
    size_t pos = 0;
    while (pos <= args.size() && vals.size() < expect) {
      size_t next = args.find(',', pos);
      std::string tok = args.substr(pos, next == std::string::npos ? next : next - pos);
      if (tok.empty()) break;
      char* end = nullptr;
      double v = std::strtod(tok.c_str(), &end);
      if (end == tok.c_str() || *end != '\0')
        fail(Err::ConfigError, "state spec: bad numeric argument '" + tok + "'");
      vals.push_back(v);
      if (next == std::string::npos) break;
      pos = next + 1;
    }
    if (vals.size() != expect)
      fail(Err::ConfigError, "state spec '" + head + "': expected " + std::to_string(expect) +
                                 " arguments");
    return vals;
  };

  StateSpec spec;
  if (head == "hermite") {
    spec.kind = StateSpec::Kind::hermite;
    spec.index = static_cast<int>(split_args(1)[0]);
  } else if (head == "coherent") {
    spec.kind = StateSpec::Kind::coherent;
    auto v = split_args(2);
    spec.x0 = v[0];
    spec.p0 = v[1];
  } else if (head == "cat") {
    spec.kind = StateSpec::Kind::cat;
    auto v = split_args(2);
    spec.alpha = v[0];
    spec.phase = v[1];
  } else if (head == "plane") {
    spec.kind = StateSpec::Kind::plane_wave_windowed;
    spec.p0 = split_args(1)[0];
  } else if (head == "csv") {
    if (args.empty()) fail(Err::ConfigError, "state spec: csv needs a path");
    spec.kind = StateSpec::Kind::custom_csv;
    spec.path = args;
  } else {
    fail(Err::ConfigError, "state spec: unknown kind '" + head + "'");
  }
  return spec;
}

std::vector<WaveFunction> standard_catalog(const SpatialGrid& grid) {
  std::vector<WaveFunction> states;
  states.push_back(hermite_state(0, grid));
  states.push_back(hermite_state(1, grid));
  states.push_back(hermite_state(2, grid));
  states.push_back(coherent_state(1.0, 0.0, grid));
  states.push_back(coherent_state(2.0, 0.0, grid));
  states.push_back(coherent_state(0.0, 1.0, grid));
  states.push_back(coherent_state(1.0, 2.0, grid));
  states.push_back(cat_state(2.0, 0.0, grid));
  return states;
}

std::vector<std::pair<WaveFunction, WaveFunction>> standard_pairs(const SpatialGrid& grid) {
  std::vector<std::pair<WaveFunction, WaveFunction>> pairs;
  pairs.emplace_back(hermite_state(0, grid), hermite_state(0, grid));
  pairs.emplace_back(hermite_state(0, grid), hermite_state(1, grid));
  pairs.emplace_back(hermite_state(0, grid), coherent_state(2.0, 0.0, grid));
  pairs.emplace_back(coherent_state(1.0, 0.0, grid), hermite_state(0, grid));
  pairs.emplace_back(hermite_state(1, grid), coherent_state(0.0, 1.0, grid));
  pairs.emplace_back(coherent_state(1.0, 2.0, grid), cat_state(2.0, 0.0, grid));
  return pairs;
}

}  // namespace wwm
