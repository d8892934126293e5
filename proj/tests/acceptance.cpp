// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <sys/wait.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "scatter1d/dddp.hpp"
#include "scatter1d/experiments.hpp"
#include "scatter1d/presets.hpp"
#include "scatter1d/scarf.hpp"
#include "scatter1d/spectral.hpp"
#include "scatter1d/transfer.hpp"

using namespace scatter1d;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string fmt(double v) {
  char b[64];
  std::snprintf(b, sizeof b, "%.6g", v);
  return b;
}

void note(Outcome& o, bool ok, const std::string& what) {
  o.pass = o.pass && ok;
  if (!o.detail.empty()) o.detail += "; ";
  o.detail += what + (ok ? "" : " [x]");
}

Outcome c1_scarf_anomaly() {
  Outcome o;
  for (double q : {0.0, 1.0, 2.0}) {
    const auto z = reflection_at_zero(ScarfII{0.2, q});
    note(o, std::abs(z.R - 0.31013) < 1e-3, "q=" + fmt(q) + " R(0)=" + fmt(z.R));
  }
  const double r0 = scarf_R0(0.2);
  note(o, std::abs(r0 - 0.31013) < 1e-5, "closed form " + fmt(r0));
  return o;
}

Outcome c2_ordinary_threshold() {
  Outcome o;
  const double ra = scarf_R({0.2, 1.5}, 1e-8);
  const double rn = scattering(ScarfII{0.2, 1.5}, 1e-8).R;
  note(o, ra > 0.999, "analytic " + fmt(ra));
  note(o, std::abs(rn - ra) < 1e-3, "numeric " + fmt(rn));
  return o;
}

Outcome c3_dddp_manifold() {
  Outcome o;
  double worst = 0.0;
  double lowest_off = 1.0;
  for (double x : {0.1, 0.3, 0.5, 0.7, 0.9}) {
    const double a = 1.0;
    const double u1 = x / a;
    const double u2 = dddp_hbs_u2(u1, a);
    const double expect = dddp_R0_at_hbs(u1, a);
    worst = std::max(worst, std::abs(reflection_at_zero(DeltaPair{u1, u2, a}).R - expect));
    lowest_off = std::min(lowest_off, reflection_at_zero(DeltaPair{u1, 1.2 * u2, a}).R);
  }
  note(o, worst < 1e-4, "max |dR0| on manifold " + fmt(worst));
  note(o, lowest_off > 0.99, "min R0 off manifold " + fmt(lowest_off));
  return o;
}

Outcome c4_unitarity() {
  Outcome o;
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> sd(-2.0, 2.0), qd(-3.0, 4.0), le(-6.0, 2.0);
  double worst_ulps = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const auto pr = scarf_probabilities({sd(rng), qd(rng)}, std::pow(10.0, le(rng)));
    worst_ulps = std::max(worst_ulps, std::abs(pr.R + pr.T - 1.0) / std::numeric_limits<double>::epsilon());
  }
  note(o, worst_ulps <= 4.0, "closed form max " + fmt(worst_ulps) + " ulp");

  std::uniform_real_distribution<double> u(0.0, 3.0), ln(-3.0, 1.0);
  std::uniform_int_distribution<int> fam(0, 3);
  double worst_num = 0.0;
  for (int i = 0; i < 1000; ++i) {
    PotentialSpec p;
    switch (fam(rng)) {
      case 0: p = DeltaPair{u(rng), u(rng), 0.05 + u(rng)}; break;
      case 1: p = ScarfII{sd(rng), qd(rng)}; break;
      case 2: p = SquareWellBarrier{u(rng), u(rng), 0.2 + u(rng), u(rng)}; break;
      default: p = SinSquaredWellBarrier{u(rng), u(rng), 0.2 + u(rng), u(rng)}; break;
    }
    const auto res = scattering(p, std::pow(10.0, ln(rng)), 400);
    worst_num = std::max(worst_num, std::abs(res.R + res.T - 1.0));
  }
  note(o, worst_num < 1e-6, "numeric max " + fmt(worst_num));
  return o;
}

Outcome c5_spectrum() {
  Outcome o;
  const auto e = bound_states(ScarfII{0.2, 2.5});
  const std::vector<double> ref{-6.25, -2.25, -0.25};
  bool ok = e.size() == ref.size();
  for (std::size_t i = 0; ok && i < e.size(); ++i) ok = std::abs(e[i] - ref[i]) < 1e-4;
  std::string list;
  for (double v : e) list += (list.empty() ? "" : " ") + fmt(v);
  note(o, ok, "q=2.5 {" + list + "}");
  const auto e2 = bound_states(ScarfII{0.2, 2.0});
  const auto prof = zero_energy_profile(ScarfII{0.2, 2.0});
  note(o, e2.size() == 2, "q=2 count " + std::to_string(e2.size()));
  note(o, prof.is_hbs && prof.nodes == 2, "q=2 HBS nodes " + std::to_string(prof.nodes));
  return o;
}

Outcome c6_oracle_equivalence() {
  Outcome o;
  const DeltaPair d{1.0, 2.5, 0.8};
  double wd = 0.0;
  const ScarfII s{0.2, 1.5};
  double ws = 0.0;
  for (int i = 0; i < 50; ++i) {
    const double Ed = 1e-3 + (10.0 - 1e-3) * i / 49.0;
    wd = std::max(wd, std::abs(scattering(d, Ed).R - dddp_R(d, Ed)));
    const double Es = 0.01 + (5.0 - 0.01) * i / 49.0;
    ws = std::max(ws, std::abs(scattering(s, Es, 4000).R - scarf_R(s, Es)));
  }
  note(o, wd < 1e-8, "dddp max |dR| " + fmt(wd));
  note(o, ws < 1e-3, "scarf max |dR| " + fmt(ws));
  double wq = 0.0;
  for (double E : {0.01, 0.1, 0.5, 1.0, 2.0, 5.0, 10.0}) {
    wq = std::max(wq, std::abs(scattering(SquareWellBarrier{2.0, 0.0, 1.5, 0.0}, E).T - oracle::square_well_T(2.0, 1.5, E)));
  }
  note(o, wq < 1e-8, "square well max |dT| " + fmt(wq));
  return o;
}

// Width of the run of R < 0.1 that starts at the first sweep point, clipped to q < 0.5.
double low_band_width(const SweepTable& t) {
  double end = t.records.front().param;
  for (const auto& r : t.records) {
    if (r.param >= 0.5 || !(r.R < 0.1)) break;
    end = r.param;
  }
  return t.records.front().R < 0.1 ? end - t.records.front().param : 0.0;
}

Outcome c7_figure_shapes() {
  Outcome o;
  const auto a2 = figure_preset("fig4a").sweeps.at(0);
  const auto a0 = figure_preset("fig4b").sweeps.at(0);
  const double w2 = low_band_width(a2);
  const double w0 = low_band_width(a0);
  note(o, w2 > 0.0 && w0 > 0.0, "fig4 bands present");
  note(o, w0 > w2, "fig4 width a=0 " + fmt(w0) + " > a=2 " + fmt(w2));

  double loc[2] = {0.0, 0.0};
  const double etas[2] = {1.5, 0.1};
  for (int k = 0; k < 2; ++k) {
    const double eta = etas[k];
    const auto roots = find_hbs(
        [eta](double q) { return build_potential(Family::Sin2Wb, {{"q", q}, {"eta", eta}, {"a", 1.0}, {"w", 1.0}}); },
        0.01, 8.0);
    loc[k] = roots.empty() ? std::nan("") : roots.front().theta;
  }
  note(o, loc[1] > loc[0], "fig5 low-R location eta=1.5 " + fmt(loc[0]) + " -> eta=0.1 " + fmt(loc[1]));
  // the preset curves dip there
  const auto f5b = figure_preset("fig5b").sweeps.at(0);
  double rmin = 1.0;
  double shoulder = 1.0;
  for (const auto& r : f5b.records) {
    const double dq = std::abs(r.param - loc[1]);
    if (dq < 0.2) rmin = std::min(rmin, r.R);
    if (dq > 0.5 && dq < 0.7) shoulder = std::min(shoulder, r.R);
  }
  note(o, rmin < shoulder - 0.05, "fig5b dip R=" + fmt(rmin) + " below shoulders " + fmt(shoulder));
  return o;
}

Outcome c8_hbs_finder() {
  Outcome o;
  const auto roots = find_hbs([](double q) { return PotentialSpec{ScarfII{0.2, q}}; }, 0.5, 2.5);
  bool ok = roots.size() == 2 && std::abs(roots[0].theta - 1.0) < 1e-6 && std::abs(roots[1].theta - 2.0) < 1e-6;
  std::string list;
  for (const auto& r : roots) list += (list.empty() ? "" : " ") + fmt(r.theta);
  note(o, ok, "scarf roots {" + list + "}");
  const auto d = find_hbs([](double u2) { return PotentialSpec{DeltaPair{1.0, u2, 0.5}}; }, 0.5, 5.0);
  const bool dok = d.size() == 1 && std::abs(d[0].theta - 2.0) < 1e-8;
  note(o, dok, "dddp root " + (d.empty() ? std::string("none") : fmt(d[0].theta)));
  return o;
}

Outcome c9_eigenfunction_residual() {
  Outcome o;
  const ScarfParams p{0.2, 2.0};
  for (int n = 0; n <= 2; ++n) {
    const ScarfEigenstate psi(p, n);
    const auto raw = [&](double x) { return psi(x) * psi.scale(); };
    double worst = 0.0;
    for (int i = 0; i <= 2000; ++i) {
      const double x = -10.0 + i * 0.01;
      const double res = -oracle::second_derivative(raw, x, 1e-2) + (evaluate(p, x) - psi.energy()) * raw(x);
      worst = std::max(worst, std::abs(res));
    }
    note(o, worst < 1e-8 * psi.scale(), "n=" + std::to_string(n) + " residual/scale " + fmt(worst / psi.scale()));
  }
  return o;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Outcome c10_determinism() {
  Outcome o;
  const fs::path base = fs::temp_directory_path() / "scatter1d_acceptance";
  fs::remove_all(base);
  std::string first;
  for (int run = 0; run < 2; ++run) {
    const fs::path dir = base / ("run" + std::to_string(run));
    const std::string cmd = std::string("\"") + SCATTER1D_CLI + "\" figure fig2a --out-dir \"" + dir.string() +
                            "\" >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    if (!WIFEXITED(status) || WEXITSTATUS(status) != 0) {
      note(o, false, "run " + std::to_string(run) + " failed");
      return o;
    }
    const std::string body = slurp(dir / "fig2a.csv");
    if (run == 0) {
      first = body;
    } else {
      note(o, !body.empty() && body == first, std::to_string(body.size()) + " bytes, identical");
    }
  }
  fs::remove_all(base);
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"Scarf II zero-energy anomaly", c1_scarf_anomaly},
      {"Scarf II ordinary threshold", c2_ordinary_threshold},
      {"DDDP HBS manifold", c3_dddp_manifold},
      {"Unitarity", c4_unitarity},
      {"Bound spectrum", c5_spectrum},
      {"Numeric vs closed form", c6_oracle_equivalence},
      {"Figure shapes", c7_figure_shapes},
      {"HBS finder", c8_hbs_finder},
      {"Eigenfunction residual", c9_eigenfunction_residual},
      {"Determinism", c10_determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::printf("%s %2zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
