#include "scatter1d/spectral.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace scatter1d {

namespace {

double mismatch_of(const PotentialSpec& p, int n_slabs) {
  return zero_energy_profile(p, n_slabs).mismatch;
}

void rescale(std::array<double, 2>& y) {
  const double n = std::hypot(y[0], y[1]);
  if (n > 1e100 || (n < 1e-100 && n > 0.0)) {
    y[0] /= n;
    y[1] /= n;
  }
}

// Growing-mode coefficient at the far edge, normalized by the state norm.
double shoot_left(const PotentialSpec& p, double E, int n_slabs) {
  const double kappa = std::sqrt(-E);
  std::array<double, 2> y{1.0, kappa};
  for (const Segment& s : transfer_segments(p, E, n_slabs)) {
    y = s.m.apply(y);
    rescale(y);
  }
  return (y[1] + kappa * y[0]) / std::hypot(y[0], y[1]);
}

double shoot_right(const PotentialSpec& p, double E, int n_slabs) {
  const double kappa = std::sqrt(-E);
  std::array<double, 2> y{1.0, -kappa};
  const auto segs = transfer_segments(p, E, n_slabs);
  for (auto it = segs.rbegin(); it != segs.rend(); ++it) {
    y = it->m.inverse().apply(y);
    rescale(y);
  }
  return (y[1] - kappa * y[0]) / std::hypot(y[0], y[1]);
}

template <class F>
double bisect(F&& f, double lo, double hi, double flo, double tol) {
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

int count_nodes(const std::vector<double>& psi) {
  int nodes = 0;
  double last = 0.0;
  for (double v : psi) {
    if (v == 0.0) continue;
    if (last != 0.0 && (v < 0.0) != (last < 0.0)) ++nodes;
    last = v;
  }
  return nodes;
}

ZeroEnergyProfile zero_energy_profile(const PotentialSpec& p, int n_slabs, double tol_hbs) {
  const auto segs = transfer_segments(p, 0.0, n_slabs);
  ZeroEnergyProfile out;
  std::array<double, 2> y{1.0, 0.0};
  out.xs.reserve(segs.size() + 1);
  out.psi.reserve(segs.size() + 1);
  out.xs.push_back(segs.empty() ? support_interval(p).lo : segs.front().x0);
  out.psi.push_back(y[0]);
  double peak = 1.0;
  for (const Segment& s : segs) {
    y = s.m.apply(y);
    if (s.x1 > s.x0) {
      out.xs.push_back(s.x1);
      out.psi.push_back(y[0]);
      peak = std::max(peak, std::abs(y[0]));
    }
  }
  out.mismatch = y[1] / peak;
  out.nodes = count_nodes(out.psi);
  out.is_hbs = std::abs(out.mismatch) < tol_hbs;
  out.trivial = is_free(p);
  return out;
}

std::vector<HbsRoot> find_hbs(const FamilyGenerator& family, double lo, double hi, const HbsSearchOptions& opts) {
  if (!(hi > lo)) throw std::invalid_argument("HBS search range must satisfy lo < hi");
  if (opts.scan_points < 2) throw std::invalid_argument("HBS scan needs at least 2 points");
  if (!(opts.tol > 0.0)) throw std::invalid_argument("HBS tolerance must be > 0");

  const auto mismatch = [&](double theta) { return mismatch_of(family(theta), opts.n_slabs); };
  const int n = opts.scan_points;
  std::vector<double> thetas(static_cast<std::size_t>(n));
  std::vector<double> values(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    thetas[static_cast<std::size_t>(i)] = (i == n - 1) ? hi : lo + (hi - lo) * i / (n - 1);
    values[static_cast<std::size_t>(i)] = mismatch(thetas[static_cast<std::size_t>(i)]);
  }

  std::vector<double> roots;
  for (std::size_t i = 0; i < thetas.size(); ++i) {
    if (values[i] == 0.0) roots.push_back(thetas[i]);
    if (i + 1 < thetas.size() && values[i] != 0.0 && values[i + 1] != 0.0 &&
        (values[i] < 0.0) != (values[i + 1] < 0.0)) {
      roots.push_back(bisect(mismatch, thetas[i], thetas[i + 1], values[i], opts.tol));
    }
  }

  std::vector<HbsRoot> out;
  for (double theta : roots) {
    const PotentialSpec p = family(theta);
    if (is_free(p)) continue;
    const ZeroEnergyProfile prof = zero_energy_profile(p, opts.n_slabs);
    out.push_back({theta, prof.nodes, prof.mismatch});
  }
  return out;
}

std::optional<double> default_energy_floor(const PotentialSpec& p, int n_slabs) {
  if (const auto* d = std::get_if<DeltaPair>(&p)) {
    if (!(d->u1 > 0.0)) return std::nullopt;
    return -2.0 * d->u1 * d->u1;
  }
  const Interval supp = support_interval(p);
  const int samples = 4 * std::max(n_slabs, 1);
  double vmin = 0.0;
  for (int i = 0; i <= samples; ++i) {
    vmin = std::min(vmin, evaluate(p, supp.lo + supp.length() * i / samples));
  }
  if (!(vmin < 0.0)) return std::nullopt;
  return 1.05 * vmin;
}

std::vector<double> bound_states(const PotentialSpec& p, std::optional<double> e_min, int n_slabs) {
  validate(p);
  if (!e_min) e_min = default_energy_floor(p, n_slabs);
  if (!e_min) return {};
  if (!(*e_min < 0.0)) throw std::invalid_argument("bound-state search floor must be < 0");

  constexpr int grid = 400;
  constexpr double tol = 1e-10;
  const double top = -1e-9 * std::max(1.0, std::abs(*e_min));
  const auto left = [&](double E) { return shoot_left(p, E, n_slabs); };
  const auto right = [&](double E) { return shoot_right(p, E, n_slabs); };

  std::vector<double> energies(grid);
  std::vector<double> values(grid);
  for (int i = 0; i < grid; ++i) {
    energies[static_cast<std::size_t>(i)] = (i == grid - 1) ? top : *e_min + (top - *e_min) * i / (grid - 1);
    values[static_cast<std::size_t>(i)] = left(energies[static_cast<std::size_t>(i)]);
  }

  std::vector<double> out;
  for (std::size_t i = 0; i + 1 < energies.size(); ++i) {
    const double a = values[i];
    const double b = values[i + 1];
    if (a == 0.0) {
      out.push_back(energies[i]);
      continue;
    }
    if (b == 0.0 || (a < 0.0) == (b < 0.0)) continue;
    const double root = bisect(left, energies[i], energies[i + 1], a, tol);

    const double ra = right(energies[i]);
    const double rb = right(energies[i + 1]);
    if (ra != 0.0 && rb != 0.0 && (ra < 0.0) == (rb < 0.0)) continue;
    const double mirror = (ra == 0.0) ? energies[i] : (rb == 0.0) ? energies[i + 1]
                                                                    : bisect(right, energies[i], energies[i + 1], ra, tol);
    if (std::abs(mirror - root) < 1e-8) out.push_back(root);
  }
  return out;
}

}  // namespace scatter1d
