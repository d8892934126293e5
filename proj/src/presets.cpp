#include "scatter1d/presets.hpp"

#include <cstdio>
#include <stdexcept>

#include "scatter1d/scarf.hpp"
#include "scatter1d/spectral.hpp"

namespace scatter1d {

namespace {

std::string fmt12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

SweepRequest request(std::string label, Family f, std::string vary, double lo, double hi, double energy,
                     Engine engine, ParamMap params) {
  SweepRequest r;
  r.label = std::move(label);
  r.family = f;
  r.vary = std::move(vary);
  r.lo = lo;
  r.hi = hi;
  r.steps = kPresetSteps;
  r.energy = energy;
  r.engine = engine;
  r.params = std::move(params);
  return r;
}

}  // namespace

const std::vector<PresetInfo>& preset_registry() {
  static const std::vector<PresetInfo> registry = {
      {"fig1b", "dddp R(0) vs u1 on the HBS manifold, a = 0.5, 1, 2; u1 in [0.01, 0.99/a]"},
      {"fig2a", "scarf2 R(0.01) vs q in [-0.5, 3], s = 0.2"},
      {"fig2b", "scarf2 R(0.01) vs s in [0, 1], q = 1.01, 0.03, 1.97; reference R(0) at q = 1"},
      {"fig3", "scarf2 half bound states q = 0, 1, 2 at s = 0.2 on x in [-10, 10]"},
      {"fig4a", "square-wb R(0.01) vs q in [0.01, 3], u1 = u2, w = 1, a = 2"},
      {"fig4b", "square-wb R(0.01) vs q in [0.01, 3], u1 = u2, w = 1, a = 0"},
      {"fig5a", "sin2-wb R(0.01) vs q in [0.01, 8], u2 = 1.5 u1, w = 1, a = 1"},
      {"fig5b", "sin2-wb R(0.01) vs q in [0.01, 8], u2 = 0.1 u1, w = 1, a = 1"},
  };
  return registry;
}

std::vector<SweepRequest> preset_requests(std::string_view name) {
  if (name == "fig1b") {
    std::vector<SweepRequest> out;
    for (const auto& [a, tag] : {std::pair{0.5, "0.5"}, std::pair{1.0, "1"}, std::pair{2.0, "2"}}) {
      out.push_back(request(std::string("fig1b_a") + tag, Family::Dddp, "u1", 0.01, 0.99 / a, 0.0, Engine::Analytic,
                            {{"a", a}, {"hbs", 1.0}}));
    }
    return out;
  }
  if (name == "fig2a") {
    return {request("fig2a", Family::Scarf2, "q", -0.5, 3.0, 0.01, Engine::Analytic, {{"s", 0.2}})};
  }
  if (name == "fig2b") {
    return {
        request("fig2b_q1.01", Family::Scarf2, "s", 0.0, 1.0, 0.01, Engine::Analytic, {{"q", 1.01}}),
        request("fig2b_q0.03", Family::Scarf2, "s", 0.0, 1.0, 0.01, Engine::Analytic, {{"q", 0.03}}),
        request("fig2b_q1.97", Family::Scarf2, "s", 0.0, 1.0, 0.01, Engine::Analytic, {{"q", 1.97}}),
        request("fig2b_ref", Family::Scarf2, "s", 0.0, 1.0, 0.0, Engine::Analytic, {{"q", 1.0}}),
    };
  }
  if (name == "fig3") return {};
  if (name == "fig4a" || name == "fig4b") {
    const double a = name == "fig4a" ? 2.0 : 0.0;
    return {request(std::string(name), Family::SquareWb, "q", 0.01, 3.0, 0.01, Engine::Numeric,
                    {{"a", a}, {"w", 1.0}, {"eta", 1.0}})};
  }
  if (name == "fig5a" || name == "fig5b") {
    const double eta = name == "fig5a" ? 1.5 : 0.1;
    return {request(std::string(name), Family::Sin2Wb, "q", 0.01, 8.0, 0.01, Engine::Numeric,
                    {{"a", 1.0}, {"w", 1.0}, {"eta", eta}})};
  }
  throw std::invalid_argument("unknown preset '" + std::string(name) + "'");
}

WavefunctionTable sample_scarf_wavefunction(double s, double q, int n, double lo, double hi, int points,
                                            std::string label) {
  if (points < 2) throw std::invalid_argument("wavefunction table needs at least 2 points");
  if (!(hi > lo)) throw std::invalid_argument("wavefunction range must satisfy lo < hi");
  const ScarfEigenstate state({s, q}, n);
  const PotentialSpec pot = ScarfII{s, q};
  WavefunctionTable t;
  t.label = std::move(label);
  t.s = s;
  t.q = q;
  t.n = n;
  for (int i = 0; i < points; ++i) {
    const double x = i == points - 1 ? hi : lo + (hi - lo) * i / (points - 1);
    t.xs.push_back(x);
    t.potential.push_back(evaluate(pot, x));
    t.psi.push_back(state(x));
  }
  t.nodes = count_nodes(t.psi);
  return t;
}

FigureData figure_preset(std::string_view name, unsigned threads) {
  FigureData fig;
  fig.name = std::string(name);
  for (SweepRequest req : preset_requests(name)) {
    req.threads = threads;
    fig.sweeps.push_back(sweep(req));
  }
  if (name == "fig3") {
    for (int q = 0; q <= 2; ++q) {
      fig.wavefunctions.push_back(
          sample_scarf_wavefunction(0.2, q, q, -10.0, 10.0, 601, "fig3_q" + std::to_string(q)));
    }
  }
  return fig;
}

std::string wavefunction_csv(const WavefunctionTable& table) {
  std::string out = "x,V,psi\n";
  for (std::size_t i = 0; i < table.xs.size(); ++i) {
    out += fmt12(table.xs[i]) + ',' + fmt12(table.potential[i]) + ',' + fmt12(table.psi[i]) + '\n';
  }
  return out;
}

std::vector<std::filesystem::path> write_figure(const FigureData& fig, const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create directory '" + dir.string() + "': " + ec.message());
  std::vector<std::filesystem::path> written;
  for (const SweepTable& t : fig.sweeps) {
    written.push_back(dir / (t.meta.label + ".csv"));
    export_table(t, written.back(), Format::Csv);
  }
  for (const WavefunctionTable& w : fig.wavefunctions) {
    written.push_back(dir / (w.label + ".csv"));
    write_text_file(written.back(), wavefunction_csv(w));
  }
  return written;
}

}  // namespace scatter1d
