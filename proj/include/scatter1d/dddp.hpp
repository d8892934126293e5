#pragma once

// Closed forms for the double Dirac delta well-barrier -u1 delta(x) + u2 delta(x-a).

#include <complex>

#include "scatter1d/potential.hpp"

namespace scatter1d {

using DddpParams = DeltaPair;

/// Relative tolerance for membership of the half-bound-state manifold
/// u2 (1 - u1 a) = u1.
inline constexpr double kDddpManifoldTol = 1e-10;

/// Reflection amplitude for incidence from the left, phase referenced to the
/// well at x = 0. Requires E > 0; the E -> 0 limit is 0/0 and lives in
/// dddp_R0_at_hbs.
std::complex<double> dddp_reflection_amplitude(const DddpParams& p, double E);

double dddp_R(const DddpParams& p, double E);

/// Barrier strength that puts a nodeless half bound state at E = 0:
/// u2 = u1 / (1 - u1 a). Only exists for u1 a < 1.
double dddp_hbs_u2(double u1, double a);

bool dddp_on_hbs_manifold(const DddpParams& p, double tol = kDddpManifoldTol);

/// lim_{E->0} R on the manifold, a function of u1*a alone.
double dddp_R0_at_hbs(double u1, double a);

/// Zero-energy solution on the manifold, normalized to 1 on the left tail:
/// 1 for x <= 0, 1 - u1 x between the kicks, 1 - u1 a beyond.
double dddp_hbs_wavefunction(const DddpParams& p, double x);

}  // namespace scatter1d
