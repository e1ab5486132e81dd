#include "wwm/io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace wwm {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void atomic_write(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  fs::path target(path);
  if (target.has_parent_path()) {
    std::error_code ec;
    fs::create_directories(target.parent_path(), ec);
  }
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) fail(Err::IoError, "atomic_write: cannot open " + tmp.string());
    out << content;
    out.flush();
    if (!out) fail(Err::IoError, "atomic_write: write failed for " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    fail(Err::IoError, "atomic_write: rename failed for " + path);
  }
}

std::string wavefunction_csv(const WaveFunction& psi) {
  std::ostringstream os;
  os << "x,re,im\n";
  for (int j = 0; j < psi.size(); ++j) {
    os << format_double(psi.axis(j)) << ',' << format_double(psi.amp[j].real()) << ','
       << format_double(psi.amp[j].imag()) << '\n';
  }
  return os.str();
}

void save_wavefunction_csv(const WaveFunction& psi, const std::string& path) {
  atomic_write(path, wavefunction_csv(psi));
}

WaveFunction load_wavefunction_csv(const std::string& path, const SpatialGrid& grid) {
  std::ifstream in(path);
  if (!in) fail(Err::IoError, "load_wavefunction_csv: cannot open " + path);
  std::string line;
  if (!std::getline(in, line) || line.rfind("x,re,im", 0) != 0)
    fail(Err::ConfigError, "load_wavefunction_csv: missing 'x,re,im' header in " + path);
  Eigen::VectorXcd amp(grid.n);
  int j = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (j >= grid.n) fail(Err::ConfigError, "load_wavefunction_csv: too many rows in " + path);
    double x = 0, re = 0, im = 0;
    if (std::sscanf(line.c_str(), "%lg,%lg,%lg", &x, &re, &im) != 3)
      fail(Err::ConfigError, "load_wavefunction_csv: malformed row '" + line + "'");
    if (std::abs(x - grid.x(j)) > 1e-9 * std::max(1.0, std::abs(grid.x(j))))
      fail(Err::ConfigError, "load_wavefunction_csv: x column does not match the grid");
    amp[j++] = cd(re, im);
  }
  if (j != grid.n)
    fail(Err::ConfigError, "load_wavefunction_csv: row count does not match the grid");
  return make_state(grid, std::move(amp));
}

std::string phase_space_csv(const PhaseSpaceFunction& f) {
  std::ostringstream os;
  os << "x,p,re,im\n";
  for (int i = 0; i < f.x_axis.count; ++i) {
    const std::string xs = format_double(f.x_axis.at(i));
    for (int k = 0; k < f.p_axis.count; ++k) {
      os << xs << ',' << format_double(f.p_axis.at(k)) << ','
         << format_double(f.values(i, k).real()) << ',' << format_double(f.values(i, k).imag())
         << '\n';
    }
  }
  return os.str();
}

void save_phase_space_csv(const PhaseSpaceFunction& f, const std::string& path) {
  atomic_write(path, phase_space_csv(f));
}

std::string gnuplot_heatmap_script(const std::string& csv_path, const std::string& title) {
  std::ostringstream os;
  os << "# gnuplot heatmaps for " << csv_path << "\n"
     << "set datafile separator ','\n"
     << "set view map\n"
     << "set size ratio -1\n"
     << "set palette defined (0 'dark-blue', 1 'white', 2 'dark-red')\n"
     << "set multiplot layout 1,3 title '" << title << "'\n"
     << "set title 'Re'\n"
     << "plot '" << csv_path << "' skip 1 using 1:2:3 with image notitle\n"
     << "set title 'Im'\n"
     << "plot '" << csv_path << "' skip 1 using 1:2:4 with image notitle\n"
     << "set title 'abs'\n"
     << "plot '" << csv_path << "' skip 1 using 1:2:(sqrt($3*$3+$4*$4)) with image notitle\n"
     << "unset multiplot\n";
  return os.str();
}

}  // namespace wwm
