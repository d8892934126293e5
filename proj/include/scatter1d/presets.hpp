#pragma once

// Versioned parameter grids for the reference figures. Every preset is a
// fixed list of sweeps (and, for fig3, wavefunction tables), so re-running a
// preset reproduces its files byte for byte.

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "scatter1d/experiments.hpp"

namespace scatter1d {

struct WavefunctionTable {
  std::string label;
  double s = 0.0;
  double q = 0.0;
  int n = 0;
  int nodes = 0;
  std::vector<double> xs;
  std::vector<double> potential;
  std::vector<double> psi;
};

struct FigureData {
  std::string name;
  std::vector<SweepTable> sweeps;
  std::vector<WavefunctionTable> wavefunctions;
};

struct PresetInfo {
  std::string_view name;
  std::string_view description;
};

inline constexpr int kPresetSteps = 600;

const std::vector<PresetInfo>& preset_registry();

/// The sweep requests behind a preset (empty for fig3).
std::vector<SweepRequest> preset_requests(std::string_view name);

/// Throws std::invalid_argument for an unknown name.
FigureData figure_preset(std::string_view name, unsigned threads = 0);

/// Scarf II eigenfunction sampled on [lo, hi] with the potential alongside.
WavefunctionTable sample_scarf_wavefunction(double s, double q, int n, double lo, double hi, int points,
                                            std::string label = {});

/// Header `x,V,psi`, 12 significant digits.
std::string wavefunction_csv(const WavefunctionTable& table);

/// One CSV per table, named `<label>.csv`. Returns the written paths.
std::vector<std::filesystem::path> write_figure(const FigureData& fig, const std::filesystem::path& dir);

}  // namespace scatter1d
