#pragma once

// One-dimensional potential families. Units: hbar^2/(2 mu) = 1, so the
// stationary equation reads psi'' + (E - V) psi = 0 and k = sqrt(E).

#include <string_view>
#include <variant>
#include <vector>

namespace scatter1d {

inline constexpr double kDefaultSupportTol = 1e-12;

/// -u1 delta(x) + u2 delta(x - a).
struct DeltaPair {
  double u1 = 0.0;
  double u2 = 0.0;
  double a = 0.0;
};

/// (s^2 - q^2 - q) sech^2 x + s (2q + 1) sech x tanh x.
struct ScarfII {
  double s = 0.0;
  double q = 0.0;
};

/// Well -u1 on [-w-a/2, -a/2], barrier +u2 on [a/2, a/2+w], zero elsewhere.
struct SquareWellBarrier {
  double u1 = 0.0;
  double u2 = 0.0;
  double w = 1.0;
  double a = 0.0;
};

/// Same geometry as SquareWellBarrier with single sin^2 lobes that vanish at
/// the feature edges.
struct SinSquaredWellBarrier {
  double u1 = 0.0;
  double u2 = 0.0;
  double w = 1.0;
  double a = 0.0;
};

/// Linear interpolation between knots, zero outside [xs.front(), xs.back()].
struct Sampled {
  std::vector<double> xs;
  std::vector<double> vs;
};

using PotentialSpec =
    std::variant<DeltaPair, ScarfII, SquareWellBarrier, SinSquaredWellBarrier, Sampled>;

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  double length() const { return hi - lo; }
};

/// Throws std::invalid_argument when a parameter invariant is violated.
void validate(const PotentialSpec& p);

/// V(x). DeltaPair has no pointwise value and throws std::domain_error.
double evaluate(const PotentialSpec& p, double x);

/// Interval outside of which |V| < tol. DeltaPair gets a unit margin around
/// its two kicks.
Interval support_interval(const PotentialSpec& p, double tol = kDefaultSupportTol);

/// Dimensionless strength used as sweep abscissa: w*sqrt(u1) for the
/// well-barrier families, q for Scarf II. Throws std::domain_error otherwise.
double effective_q(const PotentialSpec& p);

/// Interior points where V jumps, kinks or carries a delta kick, sorted.
std::vector<double> breakpoints(const PotentialSpec& p);

/// True when V is exactly constant between consecutive breakpoints.
bool is_piecewise_constant(const PotentialSpec& p);

/// True when V vanishes identically.
bool is_free(const PotentialSpec& p);

std::string_view family_name(const PotentialSpec& p);

}  // namespace scatter1d
