#include "scatter1d/potential.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace scatter1d {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

void check_well_barrier(double u1, double u2, double w, double a) {
  require(std::isfinite(u1) && u1 >= 0.0, "well depth u1 must be >= 0");
  require(std::isfinite(u2) && u2 >= 0.0, "barrier height u2 must be >= 0");
  require(std::isfinite(w) && w > 0.0, "feature width w must be > 0");
  require(std::isfinite(a) && a >= 0.0, "gap a must be >= 0");
}

double scarf_envelope(const ScarfII& p) {
  return std::abs(p.s * p.s - p.q * p.q - p.q) + std::abs(p.s * (2.0 * p.q + 1.0));
}

}  // namespace

void validate(const PotentialSpec& p) {
  std::visit(overloaded{
                 [](const DeltaPair& d) {
                   require(std::isfinite(d.u1) && d.u1 >= 0.0, "delta strength u1 must be >= 0");
                   require(std::isfinite(d.u2) && d.u2 >= 0.0, "delta strength u2 must be >= 0");
                   require(std::isfinite(d.a) && d.a >= 0.0, "delta separation a must be >= 0");
                 },
                 [](const ScarfII& s) {
                   require(std::isfinite(s.s) && std::isfinite(s.q), "Scarf II parameters must be finite");
                 },
                 [](const SquareWellBarrier& g) { check_well_barrier(g.u1, g.u2, g.w, g.a); },
                 [](const SinSquaredWellBarrier& g) { check_well_barrier(g.u1, g.u2, g.w, g.a); },
                 [](const Sampled& s) {
                   require(s.xs.size() >= 2, "sampled potential needs at least 2 points");
                   require(s.xs.size() == s.vs.size(), "sampled xs and vs differ in length");
                   require(std::adjacent_find(s.xs.begin(), s.xs.end(),
                                              [](double l, double r) { return !(l < r); }) == s.xs.end(),
                           "sampled abscissae must be strictly increasing");
                 },
             },
             p);
}

double evaluate(const PotentialSpec& p, double x) {
  return std::visit(
      overloaded{
          [](const DeltaPair&) -> double {
            throw std::domain_error("non-pointwise potential: delta pair has no value V(x)");
          },
          [x](const ScarfII& s) {
            const double sech = 1.0 / std::cosh(x);
            return (s.s * s.s - s.q * s.q - s.q) * sech * sech + s.s * (2.0 * s.q + 1.0) * sech * std::tanh(x);
          },
          [x](const SquareWellBarrier& g) {
            const double h = 0.5 * g.a;
            if (x >= -g.w - h && x <= -h) return -g.u1;
            if (x >= h && x <= h + g.w) return g.u2;
            return 0.0;
          },
          [x](const SinSquaredWellBarrier& g) {
            const double h = 0.5 * g.a;
            if (x >= -g.w - h && x <= -h) {
              const double s = std::sin(std::numbers::pi * (x + h + g.w) / g.w);
              return -g.u1 * s * s;
            }
            if (x >= h && x <= h + g.w) {
              const double s = std::sin(std::numbers::pi * (x - h) / g.w);
              return g.u2 * s * s;
            }
            return 0.0;
          },
          [x](const Sampled& s) {
            if (x < s.xs.front() || x > s.xs.back()) return 0.0;
            if (x == s.xs.back()) return s.vs.back();
            const auto it = std::upper_bound(s.xs.begin(), s.xs.end(), x);
            const auto i = static_cast<std::size_t>(it - s.xs.begin()) - 1;
            const double t = (x - s.xs[i]) / (s.xs[i + 1] - s.xs[i]);
            return s.vs[i] + t * (s.vs[i + 1] - s.vs[i]);
          },
      },
      p);
}

Interval support_interval(const PotentialSpec& p, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("support tolerance must be > 0");
  return std::visit(overloaded{
                        [](const DeltaPair& d) { return Interval{-1.0, d.a + 1.0}; },
                        [tol](const ScarfII& s) {
                          const double env = scarf_envelope(s);
                          // V is identically zero or below tol everywhere; any interval will do.
                          if (env <= tol) return Interval{-1.0, 1.0};
                          const double cut = std::acosh(env / tol);
                          return Interval{-cut, cut};
                        },
                        [](const SquareWellBarrier& g) {
                          return Interval{-g.w - 0.5 * g.a, 0.5 * g.a + g.w};
                        },
                        [](const SinSquaredWellBarrier& g) {
                          return Interval{-g.w - 0.5 * g.a, 0.5 * g.a + g.w};
                        },
                        [](const Sampled& s) { return Interval{s.xs.front(), s.xs.back()}; },
                    },
                    p);
}

double effective_q(const PotentialSpec& p) {
  return std::visit(overloaded{
                        [](const DeltaPair&) -> double {
                          throw std::domain_error("no q defined for the delta pair family");
                        },
                        [](const ScarfII& s) { return s.q; },
                        [](const SquareWellBarrier& g) { return g.w * std::sqrt(g.u1); },
                        [](const SinSquaredWellBarrier& g) { return g.w * std::sqrt(g.u1); },
                        [](const Sampled&) -> double {
                          throw std::domain_error("no q defined for a sampled potential");
                        },
                    },
                    p);
}

std::vector<double> breakpoints(const PotentialSpec& p) {
  std::vector<double> pts = std::visit(
      overloaded{
          [](const DeltaPair& d) { return std::vector<double>{0.0, d.a}; },
          [](const ScarfII&) { return std::vector<double>{}; },
          [](const SquareWellBarrier& g) { return std::vector<double>{-0.5 * g.a, 0.5 * g.a}; },
          [](const SinSquaredWellBarrier& g) { return std::vector<double>{-0.5 * g.a, 0.5 * g.a}; },
          [](const Sampled& s) { return std::vector<double>(s.xs.begin() + 1, s.xs.end() - 1); },
      },
      p);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

bool is_piecewise_constant(const PotentialSpec& p) {
  return std::holds_alternative<DeltaPair>(p) || std::holds_alternative<SquareWellBarrier>(p);
}

bool is_free(const PotentialSpec& p) {
  return std::visit(overloaded{
                        [](const DeltaPair& d) { return d.u1 == 0.0 && d.u2 == 0.0; },
                        [](const ScarfII& s) { return scarf_envelope(s) == 0.0; },
                        [](const SquareWellBarrier& g) { return g.u1 == 0.0 && g.u2 == 0.0; },
                        [](const SinSquaredWellBarrier& g) { return g.u1 == 0.0 && g.u2 == 0.0; },
                        [](const Sampled& s) {
                          return std::all_of(s.vs.begin(), s.vs.end(), [](double v) { return v == 0.0; });
                        },
                    },
                    p);
}

std::string_view family_name(const PotentialSpec& p) {
  constexpr std::string_view names[] = {"dddp", "scarf2", "square-wb", "sin2-wb", "sampled"};
  return names[p.index()];
}

}  // namespace scatter1d
