#pragma once

// Transfer-matrix scattering engine. A transfer matrix maps (psi, psi') at the
// left end of a region to (psi, psi') at its right end at fixed energy.

#include <array>
#include <complex>
#include <vector>

#include "scatter1d/potential.hpp"

namespace scatter1d {

inline constexpr int kDefaultSlabs = 4000;

/// Real 2x2 propagator of (psi, psi'). Entries are real because the potential
/// and energy are.
struct TransferMatrix {
  double m11 = 1.0;
  double m12 = 0.0;
  double m21 = 0.0;
  double m22 = 1.0;
  double energy = 0.0;

  double det() const { return m11 * m22 - m12 * m21; }
  std::array<double, 2> apply(std::array<double, 2> v) const {
    return {m11 * v[0] + m12 * v[1], m21 * v[0] + m22 * v[1]};
  }
  TransferMatrix inverse() const;
};

/// Composition: the result propagates through `first`, then `second`.
TransferMatrix then(const TransferMatrix& first, const TransferMatrix& second);

/// Exact propagator of psi'' = (V - E) psi across a constant slab of width dx.
TransferMatrix slab_transfer(double V, double E, double dx);

/// Fourth-order Magnus step for a smooth potential sampled at the two Gauss
/// points x_m -/+ dx/(2 sqrt 3). Unimodular by construction and identical to
/// slab_transfer when both samples agree.
TransferMatrix gauss_slab_transfer(double v_left, double v_right, double E, double dx);

/// psi continuous, psi' jumps by strength * psi. Positive strength is a barrier.
TransferMatrix delta_transfer(double strength);

/// One factor of a propagation plan. A delta kick has x0 == x1.
struct Segment {
  double x0 = 0.0;
  double x1 = 0.0;
  TransferMatrix m;
};

/// Ordered factors across support_interval(p): uniform slabs merged with the
/// family's breakpoints, exact slabs on piecewise-constant families, Magnus
/// steps on smooth ones, and delta kicks at their positions.
std::vector<Segment> transfer_segments(const PotentialSpec& p, double E, int n_slabs = kDefaultSlabs,
                                       double support_tol = kDefaultSupportTol);

TransferMatrix total_transfer(const PotentialSpec& p, double E, int n_slabs = kDefaultSlabs,
                              double support_tol = kDefaultSupportTol);

struct ScatteringResult {
  std::complex<double> r;
  std::complex<double> t;
  double R = 0.0;
  double T = 0.0;
  double E = 0.0;
};

/// r and t for the asymptotic forms psi = e^{ikx} + r e^{-ikx} (left) and
/// psi = t e^{ikx} (right). Plane waves are written in absolute x, so the
/// phase of r is referenced to x = 0 whatever the support interval.
ScatteringResult scattering_from_transfer(const TransferMatrix& m, Interval support, double E);

ScatteringResult scattering(const PotentialSpec& p, double E, int n_slabs = kDefaultSlabs);

struct ZeroEnergyReflection {
  double R = 0.0;
  bool converged = false;
  std::array<double, 3> energies{1e-6, 1e-8, 1e-10};
  std::array<double, 3> samples{};
};

/// R along E = 1e-6, 1e-8, 1e-10; reports the last value and whether the last
/// two differ by less than 1e-4.
ZeroEnergyReflection reflection_at_zero(const PotentialSpec& p, int n_slabs = kDefaultSlabs);

}  // namespace scatter1d
