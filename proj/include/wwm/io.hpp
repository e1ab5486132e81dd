#pragma once

#include <string>

#include "wwm/phase_space.hpp"

namespace wwm {

// Doubles serialized with 17 significant digits (%.17g): bit-faithful
// round trips and byte-identical reruns.
std::string format_double(double v);

// Writes content to path via a temp file + atomic rename; no partial files.
void atomic_write(const std::string& path, const std::string& content);

// WaveFunction CSV: header "x,re,im", one row per grid point.
std::string wavefunction_csv(const WaveFunction& psi);
void save_wavefunction_csv(const WaveFunction& psi, const std::string& path);
WaveFunction load_wavefunction_csv(const std::string& path, const SpatialGrid& grid);

// PhaseSpaceFunction CSV: header "x,p,re,im", row-major (x outer, p inner).
std::string phase_space_csv(const PhaseSpaceFunction& f);
void save_phase_space_csv(const PhaseSpaceFunction& f, const std::string& path);

// gnuplot script rendering Re/Im/abs heatmaps of a phase-space CSV.
std::string gnuplot_heatmap_script(const std::string& csv_path, const std::string& title);

}  // namespace wwm
