#include "scatter1d/transfer.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace scatter1d {

namespace {

// cosh(sqrt(mu)) and sinh(sqrt(mu))/sqrt(mu), continued analytically to mu < 0.
struct HyperPair {
  double c;
  double s;
};

HyperPair hyper_pair(double mu) {
  if (std::abs(mu) < 1e-6) {
    return {1.0 + mu * (1.0 / 2.0 + mu * (1.0 / 24.0 + mu / 720.0)),
            1.0 + mu * (1.0 / 6.0 + mu * (1.0 / 120.0 + mu / 5040.0))};
  }
  if (mu > 0.0) {
    const double l = std::sqrt(mu);
    return {std::cosh(l), std::sinh(l) / l};
  }
  const double l = std::sqrt(-mu);
  return {std::cos(l), std::sin(l) / l};
}

std::vector<double> slab_nodes(Interval supp, int n_slabs, const std::vector<double>& bps) {
  const double h = supp.length() / n_slabs;
  std::vector<double> nodes(static_cast<std::size_t>(n_slabs) + 1);
  for (int i = 0; i <= n_slabs; ++i) nodes[static_cast<std::size_t>(i)] = supp.lo + i * h;
  nodes.back() = supp.hi;
  for (double b : bps) {
    if (!(b > supp.lo && b < supp.hi)) continue;
    const auto idx = static_cast<std::size_t>(std::lround((b - supp.lo) / h));
    if (std::abs(nodes[idx] - b) <= 1e-9 * h) {
      nodes[idx] = b;
    } else {
      nodes.push_back(b);
    }
  }
  std::sort(nodes.begin(), nodes.end());
  return nodes;
}

}  // namespace

TransferMatrix TransferMatrix::inverse() const {
  const double d = det();
  return {m22 / d, -m12 / d, -m21 / d, m11 / d, energy};
}

TransferMatrix then(const TransferMatrix& first, const TransferMatrix& second) {
  return {second.m11 * first.m11 + second.m12 * first.m21, second.m11 * first.m12 + second.m12 * first.m22,
          second.m21 * first.m11 + second.m22 * first.m21, second.m21 * first.m12 + second.m22 * first.m22,
          first.energy};
}

TransferMatrix slab_transfer(double V, double E, double dx) {
  if (!(dx > 0.0)) throw std::invalid_argument("slab width must be > 0");
  const double w = V - E;
  if (std::abs(w) < 1e-12 * std::max({std::abs(E), std::abs(V), 1.0})) {
    return {1.0, dx, 0.0, 1.0, E};
  }
  const auto [c, s] = hyper_pair(w * dx * dx);
  return {c, dx * s, w * dx * s, c, E};
}

TransferMatrix gauss_slab_transfer(double v_left, double v_right, double E, double dx) {
  if (!(dx > 0.0)) throw std::invalid_argument("slab width must be > 0");
  const double w1 = v_left - E;
  const double w2 = v_right - E;
  const double wb = 0.5 * (w1 + w2);
  // exp of the traceless Magnus exponent [[c, dx], [dx wb, -c]].
  const double c = std::sqrt(3.0) / 12.0 * dx * dx * (w1 - w2);
  const auto [ch, sh] = hyper_pair(c * c + dx * dx * wb);
  return {ch + sh * c, sh * dx, sh * dx * wb, ch - sh * c, E};
}

TransferMatrix delta_transfer(double strength) { return {1.0, 0.0, strength, 1.0, 0.0}; }

std::vector<Segment> transfer_segments(const PotentialSpec& p, double E, int n_slabs, double support_tol) {
  validate(p);
  if (n_slabs < 1) throw std::invalid_argument("n_slabs must be >= 1");
  const Interval supp = support_interval(p, support_tol);
  const std::vector<double> nodes = slab_nodes(supp, n_slabs, breakpoints(p));

  const auto* deltas = std::get_if<DeltaPair>(&p);
  const bool constant_pieces = is_piecewise_constant(p);
  const double gauss = 0.5 / std::sqrt(3.0);

  std::vector<Segment> out;
  out.reserve(nodes.size() + 2);
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
    const double x0 = nodes[i];
    const double x1 = nodes[i + 1];
    if (deltas) {
      if (x0 == 0.0) out.push_back({x0, x0, delta_transfer(-deltas->u1)});
      if (x0 == deltas->a) out.push_back({x0, x0, delta_transfer(deltas->u2)});
    }
    if (!(x1 > x0)) continue;
    const double dx = x1 - x0;
    const double xm = 0.5 * (x0 + x1);
    TransferMatrix m;
    if (deltas) {
      m = slab_transfer(0.0, E, dx);
    } else if (constant_pieces) {
      m = slab_transfer(evaluate(p, xm), E, dx);
    } else {
      m = gauss_slab_transfer(evaluate(p, xm - gauss * dx), evaluate(p, xm + gauss * dx), E, dx);
    }
    m.energy = E;
    out.push_back({x0, x1, m});
  }
  for (auto& s : out) s.m.energy = E;
  return out;
}

TransferMatrix total_transfer(const PotentialSpec& p, double E, int n_slabs, double support_tol) {
  TransferMatrix total{1.0, 0.0, 0.0, 1.0, E};
  for (const Segment& s : transfer_segments(p, E, n_slabs, support_tol)) total = then(total, s.m);
  total.energy = E;
  return total;
}

ScatteringResult scattering_from_transfer(const TransferMatrix& m, Interval support, double E) {
  if (!(E > 0.0)) throw std::domain_error("scattering needs E > 0; use reflection_at_zero for the limit");
  using namespace std::complex_literals;
  const double k = std::sqrt(E);
  const std::complex<double> ik = 1i * k;
  const std::complex<double> el = std::exp(ik * support.lo);
  const std::complex<double> er = std::exp(ik * support.hi);

  // Propagated images of e^{ikx} and e^{-ikx} seeded at the left edge.
  const std::complex<double> u1 = el * (m.m11 + ik * m.m12);
  const std::complex<double> u2 = el * (m.m21 + ik * m.m22);
  const std::complex<double> v1 = (m.m11 - ik * m.m12) / el;
  const std::complex<double> v2 = (m.m21 - ik * m.m22) / el;

  // Division by ik is folded into the ratios so small k loses no precision.
  const std::complex<double> den = ik * v1 - v2;
  ScatteringResult out;
  out.r = -(ik * u1 - u2) / den;
  out.t = 2.0 * ik * m.det() / (er * den);
  out.R = std::norm(out.r);
  out.T = std::norm(out.t);
  out.E = E;
  return out;
}

ScatteringResult scattering(const PotentialSpec& p, double E, int n_slabs) {
  if (!(E > 0.0)) throw std::domain_error("scattering needs E > 0; use reflection_at_zero for the limit");
  const Interval supp = support_interval(p);
  return scattering_from_transfer(total_transfer(p, E, n_slabs), supp, E);
}

ZeroEnergyReflection reflection_at_zero(const PotentialSpec& p, int n_slabs) {
  ZeroEnergyReflection out;
  for (std::size_t i = 0; i < out.energies.size(); ++i) {
    out.samples[i] = scattering(p, out.energies[i], n_slabs).R;
  }
  out.R = out.samples.back();
  out.converged = std::abs(out.samples[2] - out.samples[1]) < 1e-4;
  return out;
}

}  // namespace scatter1d
