#include "scatter1d/scarf.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace scatter1d {

namespace {

constexpr double pi = std::numbers::pi;

// sin^2(pi q) computed from the fractional part so that it is exactly
// periodic and even in q.
double sin2_pi(double q) {
  const double f = std::abs(q - std::nearbyint(q));
  const double v = std::sin(pi * f);
  return v * v;
}

void check_energy(double E) {
  if (!(E > 0.0)) throw std::domain_error("Scarf II closed form needs E > 0; use scarf_R0/scarf_T0 for the limit");
}

// (s, q) with q >= -1/2 describing the same potential.
ScarfParams canonical(ScarfParams p) {
  if (p.q < -0.5) return {-p.s, -1.0 - p.q};
  return p;
}

std::complex<double> pochhammer(std::complex<double> a, int m) {
  std::complex<double> r = 1.0;
  for (int j = 0; j < m; ++j) r *= a + static_cast<double>(j);
  return r;
}

}  // namespace

bool is_integer_q(double q) { return std::abs(q - std::nearbyint(q)) < kIntegerQTol; }

ProbabilityPair scarf_probabilities(const ScarfParams& p, double E) {
  check_energy(E);
  const double k = std::sqrt(E);
  const double sq = sin2_pi(p.q);
  const double shs = std::sinh(pi * p.s);
  const double sh2s = shs * shs;
  const double ch2s = 1.0 + sh2s;

  double t = 0.0;
  double r = 0.0;
  if (pi * k < 50.0) {
    const double shk = std::sinh(pi * k);
    const double sh2 = shk * shk;
    const double den = (sh2 + sq) * (sh2 + ch2s);
    t = sh2 * (1.0 + sh2) / den;
    r = (sq * (sh2 + ch2s) + sh2 * sh2s) / den;
  } else {
    // Divide through by sinh^4(pi k) to stay finite at large k.
    const double shk = std::sinh(pi * k);
    const double a = 1.0 / (shk * shk);
    const double den = (1.0 + sq * a) * (1.0 + ch2s * a);
    t = (1.0 + a) / den;
    r = a * (sq * (1.0 + ch2s * a) + sh2s) / den;
  }
  if (t <= 0.5) return {1.0 - t, t};
  return {r, 1.0 - r};
}

double scarf_T(const ScarfParams& p, double E) { return scarf_probabilities(p, E).T; }
double scarf_R(const ScarfParams& p, double E) { return scarf_probabilities(p, E).R; }

double scarf_T0(double s) {
  const double c = std::cosh(pi * s);
  return 1.0 / (c * c);
}

double scarf_R0(double s) {
  const double t = std::tanh(pi * s);
  return t * t;
}

BoundSpectrum scarf_bound_energies(double q) {
  const double qc = canonical({0.0, q}).q;
  BoundSpectrum out;
  if (qc <= 0.0) return out;
  const int top = is_integer_q(qc) ? static_cast<int>(std::nearbyint(qc)) - 1 : static_cast<int>(std::floor(qc));
  for (int n = 0; n <= top; ++n) {
    const double d = n - qc;
    out.energies.push_back(-d * d);
  }
  return out;
}

std::complex<double> jacobi_polynomial(int n, std::complex<double> alpha, std::complex<double> beta,
                                       std::complex<double> z) {
  if (n < 0) throw std::invalid_argument("Jacobi polynomial degree must be >= 0");
  // P_n = sum_l (n+a+b+1)_l (a+l+1)_{n-l} / (l! (n-l)!) ((z-1)/2)^l, which
  // stays finite for every complex alpha, beta.
  const std::complex<double> w = 0.5 * (z - 1.0);
  const std::complex<double> c = static_cast<double>(n) + alpha + beta + 1.0;
  std::complex<double> sum = 0.0;
  std::complex<double> wl = 1.0;
  double lfact = 1.0;
  for (int l = 0; l <= n; ++l) {
    if (l > 0) {
      wl *= w;
      lfact *= l;
    }
    double nlfact = 1.0;
    for (int j = 2; j <= n - l; ++j) nlfact *= j;
    sum += pochhammer(c, l) * pochhammer(alpha + static_cast<double>(l) + 1.0, n - l) / (lfact * nlfact) * wl;
  }
  return sum;
}

ScarfEigenstate::ScarfEigenstate(const ScarfParams& p, int n) : n_(n) {
  if (!std::isfinite(p.s) || !std::isfinite(p.q)) throw std::invalid_argument("Scarf II parameters must be finite");
  const ScarfParams c = canonical(p);
  s_ = c.s;
  q_ = c.q;
  const bool integer = is_integer_q(q_);
  const int top = integer ? static_cast<int>(std::nearbyint(q_)) : static_cast<int>(std::floor(q_));
  if (n < 0 || n > top) {
    throw std::out_of_range("Scarf II eigenfunction index " + std::to_string(n) + " outside 0.." +
                            std::to_string(top));
  }

  // Unit maximum amplitude: coarse scan, then golden-section refinement
  // around the best sample.
  constexpr double span = 40.0;
  constexpr int samples = 8001;
  const double h = 2.0 * span / (samples - 1);
  double best = 0.0;
  double best_x = 0.0;
  for (int i = 0; i < samples; ++i) {
    const double x = -span + i * h;
    const double v = std::abs(raw(x).real());
    if (v > best) {
      best = v;
      best_x = x;
    }
  }
  double lo = std::max(-span, best_x - h);
  double hi = std::min(span, best_x + h);
  const double g = 0.5 * (std::sqrt(5.0) - 1.0);
  for (int it = 0; it < 60; ++it) {
    const double x1 = hi - g * (hi - lo);
    const double x2 = lo + g * (hi - lo);
    if (std::abs(raw(x1).real()) > std::abs(raw(x2).real())) {
      hi = x2;
    } else {
      lo = x1;
    }
  }
  scale_ = std::max(best, std::abs(raw(0.5 * (lo + hi)).real()));
  if (!(scale_ > 0.0)) scale_ = 1.0;
}

std::complex<double> ScarfEigenstate::raw(double x) const {
  using namespace std::complex_literals;
  const double y = std::sinh(x);
  const double envelope = std::exp(-0.5 * q_ * std::log1p(y * y) - s_ * std::atan(y));
  const std::complex<double> alpha = -1i * s_ - q_ - 0.5;
  const std::complex<double> beta = 1i * s_ - q_ - 0.5;
  std::complex<double> phase = 1.0;
  for (int j = 0; j < n_; ++j) phase *= 1i;
  return phase * envelope * jacobi_polynomial(n_, alpha, beta, 1i * y);
}

double ScarfEigenstate::operator()(double x) const { return raw(x).real() / scale_; }

double ScarfEigenstate::energy() const {
  const double d = n_ - q_;
  return -d * d;
}

double scarf_eigenfunction(const ScarfParams& p, int n, double x) { return ScarfEigenstate(p, n)(x); }

}  // namespace scatter1d
