#include "scatter1d/dddp.hpp"

#include <cmath>
#include <stdexcept>

namespace scatter1d {

namespace {

void check_params(const DddpParams& p) {
  if (!(p.u1 >= 0.0) || !(p.u2 >= 0.0) || !(p.a > 0.0) || !std::isfinite(p.u1) || !std::isfinite(p.u2) ||
      !std::isfinite(p.a)) {
    throw std::invalid_argument("delta pair needs u1 >= 0, u2 >= 0, a > 0");
  }
}

void check_hbs_branch(double u1, double a) {
  if (!(u1 > 0.0) || !(a > 0.0)) throw std::invalid_argument("half bound state needs u1 > 0 and a > 0");
  if (!(u1 * a < 1.0)) throw std::domain_error("no HBS in this branch: requires u1*a < 1");
}

}  // namespace

std::complex<double> dddp_reflection_amplitude(const DddpParams& p, double E) {
  check_params(p);
  if (!(E > 0.0)) {
    throw std::domain_error("dddp reflection amplitude needs E > 0; use dddp_R0_at_hbs for the zero-energy limit");
  }
  using namespace std::complex_literals;
  const double k = std::sqrt(E);
  const std::complex<double> ik = 1i * k;
  const std::complex<double> em = std::exp(-ik * p.a);
  const std::complex<double> ep = std::exp(ik * p.a);
  const std::complex<double> num = 2.0 * ik * (p.u1 * em - p.u2 * ep) + 2i * p.u1 * p.u2 * std::sin(k * p.a);
  const std::complex<double> den = (2.0 * ik + p.u1) * (2.0 * ik - p.u2) * em + p.u1 * p.u2 * ep;
  return -num / den;
}

double dddp_R(const DddpParams& p, double E) { return std::norm(dddp_reflection_amplitude(p, E)); }

double dddp_hbs_u2(double u1, double a) {
  check_hbs_branch(u1, a);
  return u1 / (1.0 - u1 * a);
}

bool dddp_on_hbs_manifold(const DddpParams& p, double tol) {
  if (!(p.u1 > 0.0) || !(p.a > 0.0)) return false;
  return std::abs(p.u2 * (1.0 - p.u1 * p.a) - p.u1) / p.u1 < tol;
}

double dddp_R0_at_hbs(double u1, double a) {
  check_hbs_branch(u1, a);
  const double x = u1 * a;
  const double num = x * x - 2.0 * x;
  const double ratio = num / (num + 2.0);
  return ratio * ratio;
}

double dddp_hbs_wavefunction(const DddpParams& p, double x) {
  check_params(p);
  if (!dddp_on_hbs_manifold(p)) {
    throw std::domain_error("delta pair is off the half-bound-state manifold u2 = u1/(1 - u1 a)");
  }
  if (x <= 0.0) return 1.0;
  if (x < p.a) return 1.0 - p.u1 * x;
  return 1.0 - p.u1 * p.a;
}

}  // namespace scatter1d
