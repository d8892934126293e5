#pragma once

// Zero-energy analysis: half bound states (HBS), node counts and the bound
// spectrum below threshold.

#include <functional>
#include <optional>
#include <vector>

#include "scatter1d/potential.hpp"
#include "scatter1d/transfer.hpp"

namespace scatter1d {

inline constexpr double kHbsTol = 1e-6;

struct ZeroEnergyProfile {
  std::vector<double> xs;
  std::vector<double> psi;
  double mismatch = 0.0;  // psi'(x_R) / max|psi| for the seed (psi, psi') = (1, 0) at x_L
  int nodes = 0;
  bool is_hbs = false;
  bool trivial = false;  // free potential: psi == 1 is not a genuine HBS
};

ZeroEnergyProfile zero_energy_profile(const PotentialSpec& p, int n_slabs = kDefaultSlabs,
                                      double tol_hbs = kHbsTol);

/// Sign changes of psi, zeros skipped.
int count_nodes(const std::vector<double>& psi);

using FamilyGenerator = std::function<PotentialSpec(double)>;

struct HbsRoot {
  double theta = 0.0;
  int nodes = 0;
  double mismatch = 0.0;
};

struct HbsSearchOptions {
  int scan_points = 200;
  double tol = 1e-10;
  int n_slabs = kDefaultSlabs;
};

/// Parameter values in [lo, hi] where the zero-energy mismatch changes sign,
/// bisected to |d theta| < tol. Free members of the family are skipped.
std::vector<HbsRoot> find_hbs(const FamilyGenerator& family, double lo, double hi,
                              const HbsSearchOptions& opts = {});

/// Default lower end of the bound-state search: 1.05 min V for pointwise
/// potentials, -2 u1^2 for the delta pair. Empty when V >= 0 everywhere.
std::optional<double> default_energy_floor(const PotentialSpec& p, int n_slabs = kDefaultSlabs);

/// Bound energies below zero, ground state first. Shooting left to right with
/// the decaying seed (1, kappa); the eigenvalue condition is the vanishing of
/// psi' + kappa psi at x_R. Each root is confirmed by a right-to-left pass.
std::vector<double> bound_states(const PotentialSpec& p, std::optional<double> e_min = std::nullopt,
                                 int n_slabs = kDefaultSlabs);

}  // namespace scatter1d
