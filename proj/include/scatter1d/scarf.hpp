#pragma once

// Closed-form scattering, spectrum and eigenfunctions of the Scarf II potential
//   V(x) = (s^2 - q^2 - q) sech^2 x + s (2q + 1) sech x tanh x.

#include <complex>
#include <cstddef>
#include <vector>

#include "scatter1d/potential.hpp"

namespace scatter1d {

using ScarfParams = ScarfII;

inline constexpr double kIntegerQTol = 1e-9;

bool is_integer_q(double q);

struct ProbabilityPair {
  double R = 0.0;
  double T = 0.0;
};

/// R and T at E > 0. The smaller of the two is evaluated directly and the
/// other as its complement, so R + T == 1 to rounding.
ProbabilityPair scarf_probabilities(const ScarfParams& p, double E);
double scarf_T(const ScarfParams& p, double E);
double scarf_R(const ScarfParams& p, double E);

/// Zero-energy limits for integer q.
double scarf_T0(double s);
double scarf_R0(double s);

struct BoundSpectrum {
  std::vector<double> energies;  // ground state first
  std::size_t count() const { return energies.size(); }
};

/// E_n = -(n - q)^2 for n = 0..floor(q); for integer q the n = q member sits
/// at E = 0 as the half bound state and is left out. Parameters with
/// q < -1/2 are mapped through the invariance (s, q) -> (-s, -1 - q).
BoundSpectrum scarf_bound_energies(double q);

/// Jacobi polynomial P_n^{(alpha, beta)}(z) for complex parameters and argument.
std::complex<double> jacobi_polynomial(int n, std::complex<double> alpha, std::complex<double> beta,
                                       std::complex<double> z);

/// n-th eigenfunction (n = q for integer q gives the half bound state),
///   psi_n ~ i^n (1 + y^2)^(-q/2) exp(-s atan y) P_n^{(-is-q-1/2, is-q-1/2)}(i y),  y = sinh x,
/// scaled to unit maximum amplitude on the real line.
class ScarfEigenstate {
 public:
  ScarfEigenstate(const ScarfParams& p, int n);

  double operator()(double x) const;

  /// Complex value before the real projection and scaling.
  std::complex<double> raw(double x) const;

  double energy() const;
  int index() const { return n_; }
  double scale() const { return scale_; }

 private:
  double s_;
  double q_;
  int n_;
  double scale_ = 1.0;
};

double scarf_eigenfunction(const ScarfParams& p, int n, double x);

}  // namespace scatter1d
