#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "oracles.hpp"
#include "scatter1d/dddp.hpp"
#include "scatter1d/scarf.hpp"
#include "scatter1d/spectral.hpp"

using namespace scatter1d;

namespace {

PotentialSpec square_family(double q) { return SquareWellBarrier{q * q, q * q, 1.0, 0.0}; }

double tail_ratio_R0(const ZeroEnergyProfile& prof) {
  const double l = prof.psi.front() * prof.psi.front();
  const double r = prof.psi.back() * prof.psi.back();
  const double x = (l - r) / (l + r);
  return x * x;
}

}  // namespace

TEST_CASE("node counting") {
  CHECK(count_nodes({}) == 0);
  CHECK(count_nodes({1.0, 2.0, 3.0}) == 0);
  CHECK(count_nodes({1.0, -1.0, 1.0}) == 2);
  CHECK(count_nodes({1.0, 0.0, -1.0}) == 1);
  CHECK(count_nodes({1.0, 0.0, 0.0, 2.0}) == 0);
  CHECK(count_nodes({0.0, -1.0, 0.0, 1.0, 0.0}) == 1);
}

TEST_CASE("zero-energy profile of a free potential is trivial") {
  const auto prof = zero_energy_profile(ScarfII{0.0, 0.0}, 200);
  CHECK(prof.trivial);
  CHECK(prof.is_hbs);
  CHECK(prof.mismatch == 0.0);
  CHECK(prof.nodes == 0);
}

TEST_CASE("delta pair on the manifold has a nodeless half bound state") {
  const DeltaPair p{1.0, dddp_hbs_u2(1.0, 0.5), 0.5};
  const auto prof = zero_energy_profile(p, 300);
  CHECK(prof.is_hbs);
  CHECK_FALSE(prof.trivial);
  CHECK(prof.nodes == 0);
  CHECK(std::abs(prof.mismatch) < 1e-12);
  for (std::size_t i = 0; i < prof.xs.size(); ++i) {
    CHECK(prof.psi[i] == doctest::Approx(dddp_hbs_wavefunction(p, prof.xs[i])).epsilon(1e-12));
  }
  CHECK_FALSE(zero_energy_profile(DeltaPair{1.0, 2.2, 0.5}, 300).is_hbs);
}

TEST_CASE("Scarf II half bound states at integer q") {
  for (int q : {1, 2, 3}) {
    const auto prof = zero_energy_profile(ScarfII{0.2, double(q)});
    CHECK(prof.is_hbs);
    CHECK(prof.nodes == q);
    CHECK(tail_ratio_R0(prof) == doctest::Approx(scarf_R0(0.2)).epsilon(1e-4));
  }
  CHECK_FALSE(zero_energy_profile(ScarfII{0.2, 1.5}).is_hbs);
  CHECK_FALSE(zero_energy_profile(ScarfII{0.2, 0.97}).is_hbs);
}

TEST_CASE("find_hbs locates the Scarf roots") {
  const auto roots = find_hbs([](double q) { return PotentialSpec{ScarfII{0.2, q}}; }, 0.5, 2.5);
  REQUIRE(roots.size() == 2);
  CHECK(std::abs(roots[0].theta - 1.0) < 1e-6);
  CHECK(std::abs(roots[1].theta - 2.0) < 1e-6);
  CHECK(roots[0].nodes == 1);
  CHECK(roots[1].nodes == 2);
}

TEST_CASE("find_hbs locates the delta-pair manifold") {
  const auto roots = find_hbs([](double u2) { return PotentialSpec{DeltaPair{1.0, u2, 0.5}}; }, 0.5, 5.0);
  REQUIRE(roots.size() == 1);
  CHECK(std::abs(roots[0].theta - 2.0) < 1e-8);
  CHECK(roots[0].nodes == 0);
}

TEST_CASE("find_hbs skips free members") {
  // q = 0 with s = 0 is the free particle; the mismatch is identically 0 there
  const auto roots = find_hbs([](double q) { return PotentialSpec{ScarfII{0.0, q}}; }, -0.3, 1.4,
                              {.scan_points = 18, .tol = 1e-10, .n_slabs = 2000});
  for (const auto& r : roots) CHECK(std::abs(r.theta) > 1e-3);
  CHECK_THROWS_AS(find_hbs(square_family, 1.0, 1.0), std::invalid_argument);
}

TEST_CASE("square well-barrier with no gap: first half bound state at tan q = tanh q") {
  const double q1 = oracle::bisect([](double q) { return std::tan(q) - std::tanh(q); }, 3.8, 4.0);
  const auto roots = find_hbs(square_family, 0.05, 4.2, {.scan_points = 200, .tol = 1e-10, .n_slabs = 400});
  REQUIRE_FALSE(roots.empty());
  CHECK(std::abs(roots.front().theta - q1) < 1e-6);
  const auto prof = zero_energy_profile(square_family(roots.front().theta), 400);
  CHECK(prof.is_hbs);
  const auto z = reflection_at_zero(square_family(roots.front().theta), 400);
  CHECK(z.R == doctest::Approx(tail_ratio_R0(prof)).epsilon(1e-4));
}

TEST_CASE("Scarf II bound spectrum") {
  const auto e = bound_states(ScarfII{0.2, 2.5});
  REQUIRE(e.size() == 3);
  CHECK(e[0] == doctest::Approx(-6.25).epsilon(1e-7));
  CHECK(e[1] == doctest::Approx(-2.25).epsilon(1e-7));
  CHECK(e[2] == doctest::Approx(-0.25).epsilon(1e-6));
  const auto e2 = bound_states(ScarfII{0.2, 2.0});
  REQUIRE(e2.size() == 2);
  CHECK(e2[0] == doctest::Approx(-4.0).epsilon(1e-7));
  CHECK(e2[1] == doctest::Approx(-1.0).epsilon(1e-7));
  CHECK(bound_states(ScarfII{0.2, -2.5}).size() == 2);
}

TEST_CASE("attractive delta binds at -u1^2/4") {
  const auto e = bound_states(DeltaPair{2.0, 0.0, 0.5}, std::nullopt, 200);
  REQUIRE(e.size() == 1);
  CHECK(e[0] == doctest::Approx(-1.0).epsilon(1e-8));
}

TEST_CASE("finite square well spectrum against the transcendental equations") {
  // depth 10, width 2: even k tan k = kappa, odd -k cot k = kappa, k^2 + kappa^2 = 10
  const double u0 = 10.0;
  std::vector<double> ref;
  auto even = [&](double k) { return k * std::sin(k) - std::sqrt(u0 - k * k) * std::cos(k); };
  auto odd = [&](double k) { return -k * std::cos(k) - std::sqrt(u0 - k * k) * std::sin(k); };
  const double kmax = std::sqrt(u0);
  for (double k0 = 1e-6; k0 < kmax - 1e-3; k0 += 1e-3) {
    const double k1 = std::min(k0 + 1e-3, kmax - 1e-9);
    if (even(k0) * even(k1) < 0) ref.push_back(oracle::bisect(even, k0, k1));
    if (odd(k0) * odd(k1) < 0) ref.push_back(oracle::bisect(odd, k0, k1));
  }
  std::sort(ref.begin(), ref.end());
  const auto e = bound_states(SquareWellBarrier{u0, 0.0, 2.0, 0.0}, std::nullopt, 400);
  REQUIRE(e.size() == ref.size());
  for (std::size_t i = 0; i < e.size(); ++i) CHECK(e[i] == doctest::Approx(ref[i] * ref[i] - u0).epsilon(1e-8));
}

TEST_CASE("energy floor and purely repulsive potentials") {
  CHECK(*default_energy_floor(ScarfII{0.0, 2.0}) == doctest::Approx(-6.3).epsilon(1e-6));
  CHECK(*default_energy_floor(DeltaPair{1.5, 1.0, 1.0}) == -4.5);
  CHECK_FALSE(default_energy_floor(SquareWellBarrier{0.0, 2.0, 1.0, 0.0}));
  CHECK(bound_states(SquareWellBarrier{0.0, 2.0, 1.0, 0.0}).empty());
  CHECK_THROWS_AS(bound_states(ScarfII{0.2, 2.0}, 0.5), std::invalid_argument);
}
