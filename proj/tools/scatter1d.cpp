// scatter1d: reflection/transmission sweeps, half-bound-state search and
// figure presets for one-dimensional well-barrier potentials.
//
// Exit codes: 0 success, 1 usage error, 2 numerical non-convergence.

#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "scatter1d/config.hpp"
#include "scatter1d/experiments.hpp"
#include "scatter1d/presets.hpp"
#include "scatter1d/spectral.hpp"

namespace {

using namespace scatter1d;

constexpr int kExitUsage = 1;
constexpr int kExitNonConvergence = 2;

std::string fmt12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

// Options that may also come from a `--config` file. Values given on the
// command line win; any other config key is a family parameter.
class ConfigOverlay {
 public:
  void bind(const std::string& key, CLI::Option* opt, std::string* target) { slots_[key] = {opt, target}; }

  void apply(const std::string& config_path) {
    if (config_path.empty()) return;
    for (auto& [key, value] : read_config_file(config_path)) {
      const auto slot = slots_.find(key);
      if (slot == slots_.end()) {
        params_[key] = parse_number(value);
      } else if (slot->second.opt->count() == 0) {
        *slot->second.target = value;
      }
    }
  }

  /// Config-file parameters overlaid with `--param k=v` flags.
  ParamMap params(const std::vector<std::string>& flags) const {
    ParamMap out = params_;
    for (const auto& f : flags) {
      auto [k, v] = parse_param(f);
      out[k] = v;
    }
    return out;
  }

 private:
  struct Slot {
    CLI::Option* opt;
    std::string* target;
  };
  std::map<std::string, Slot> slots_;
  ParamMap params_;
};

void require_set(const std::string& value, const char* name) {
  if (value.empty()) throw std::invalid_argument(std::string("--") + name + " is required");
}

int parse_count(const std::string& text, const char* name) {
  const double v = parse_number(text);
  if (v != static_cast<double>(static_cast<int>(v))) {
    throw std::invalid_argument(std::string("--") + name + " must be an integer");
  }
  return static_cast<int>(v);
}

struct SweepArgs {
  std::string family, vary, range, steps = "600", energy = "0.01", engine = "numeric", out, format, slabs = "4000",
                                   threads = "0", config;
  std::vector<std::string> params;
};

int run_sweep(const SweepArgs& a, const ConfigOverlay& overlay) {
  require_set(a.family, "family");
  require_set(a.vary, "vary");
  require_set(a.range, "range");
  require_set(a.out, "out");

  SweepRequest req;
  req.family = parse_family(a.family);
  req.vary = a.vary;
  std::tie(req.lo, req.hi) = parse_range(a.range);
  req.steps = parse_count(a.steps, "steps");
  req.energy = parse_number(a.energy);
  req.engine = parse_engine(a.engine);
  req.params = overlay.params(a.params);
  req.n_slabs = parse_count(a.slabs, "slabs");
  req.threads = static_cast<unsigned>(parse_count(a.threads, "threads"));
  req.label = a.family + "_" + a.vary;

  Format format = Format::Csv;
  if (!a.format.empty()) {
    format = parse_format(a.format);
  } else if (std::filesystem::path(a.out).extension() == ".json") {
    format = Format::Json;
  }

  const SweepTable table = sweep(req);
  export_table(table, a.out, format);
  if (!table.all_converged()) {
    std::cerr << "warning: zero-energy limit did not converge at some sweep points\n";
    return kExitNonConvergence;
  }
  return 0;
}

struct HbsArgs {
  std::string family, vary, range, scan = "200", tol = "1e-10", slabs = "4000", config;
  std::vector<std::string> params;
};

int run_hbs(const HbsArgs& a, const ConfigOverlay& overlay) {
  require_set(a.family, "family");
  require_set(a.vary, "vary");
  require_set(a.range, "range");
  const Family family = parse_family(a.family);
  const auto names = param_names(family);
  if (std::find(names.begin(), names.end(), a.vary) == names.end()) {
    throw std::invalid_argument("cannot vary '" + a.vary + "' for family " + a.family);
  }
  const ParamMap fixed = overlay.params(a.params);
  const auto [lo, hi] = parse_range(a.range);
  HbsSearchOptions opts;
  opts.scan_points = parse_count(a.scan, "scan");
  opts.tol = parse_number(a.tol);
  opts.n_slabs = parse_count(a.slabs, "slabs");

  const auto roots = find_hbs(
      [&](double theta) {
        ParamMap p = fixed;
        p[a.vary] = theta;
        return build_potential(family, p);
      },
      lo, hi, opts);
  std::cout << a.vary << ",nodes,mismatch\n";
  for (const HbsRoot& r : roots) std::cout << fmt12(r.theta) << ',' << r.nodes << ',' << fmt12(r.mismatch) << '\n';
  return 0;
}

struct BoundArgs {
  std::string family, emin, slabs = "4000", config;
  std::vector<std::string> params;
};

int run_boundstates(const BoundArgs& a, const ConfigOverlay& overlay) {
  require_set(a.family, "family");
  const PotentialSpec p = build_potential(parse_family(a.family), overlay.params(a.params));
  std::optional<double> floor;
  if (!a.emin.empty()) floor = parse_number(a.emin);
  const auto energies = bound_states(p, floor, parse_count(a.slabs, "slabs"));
  std::cout << "n,E\n";
  for (std::size_t n = 0; n < energies.size(); ++n) std::cout << n << ',' << fmt12(energies[n]) << '\n';
  return 0;
}

struct WaveArgs {
  std::string family = "scarf2";
  double s = 0.2;
  double q = 1.0;
  int n = 0;
  std::string x_range = "-10:10";
  int points = 401;
  std::string out;
};

int run_wavefunction(const WaveArgs& a) {
  if (a.family != "scarf2") throw std::invalid_argument("wavefunction is available for --family scarf2 only");
  const auto [lo, hi] = parse_range(a.x_range);
  const WavefunctionTable t = sample_scarf_wavefunction(a.s, a.q, a.n, lo, hi, a.points);
  const std::string csv = wavefunction_csv(t);
  if (a.out.empty()) {
    std::cout << csv;
  } else {
    write_text_file(a.out, csv);
  }
  std::cerr << "nodes: " << t.nodes << '\n';
  return 0;
}

int run_figure(const std::string& name, const std::string& out_dir, bool list, unsigned threads) {
  if (list) {
    for (const PresetInfo& p : preset_registry()) std::cout << p.name << "  " << p.description << '\n';
    return 0;
  }
  if (name.empty()) throw std::invalid_argument("figure needs a preset name (see --list)");
  const FigureData fig = figure_preset(name, threads);
  for (const auto& path : write_figure(fig, out_dir)) std::cout << path.string() << '\n';
  for (const WavefunctionTable& w : fig.wavefunctions) std::cout << w.label << " nodes=" << w.nodes << '\n';
  for (const SweepTable& t : fig.sweeps) {
    if (!t.all_converged()) return kExitNonConvergence;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"One-dimensional well-barrier scattering: R/T sweeps, half bound states, figure presets"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));

  SweepArgs sw;
  ConfigOverlay sw_overlay;
  auto* sweep_cmd = app.add_subcommand("sweep", "R and T along a parameter grid");
  sw_overlay.bind("family", sweep_cmd->add_option("--family", sw.family, "dddp|scarf2|square-wb|sin2-wb"), &sw.family);
  sw_overlay.bind("vary", sweep_cmd->add_option("--vary", sw.vary, "parameter to sweep"), &sw.vary);
  sw_overlay.bind("range", sweep_cmd->add_option("--range", sw.range, "lo:hi"), &sw.range);
  sw_overlay.bind("steps", sweep_cmd->add_option("--steps", sw.steps, "grid points"), &sw.steps);
  sw_overlay.bind("energy", sweep_cmd->add_option("--energy", sw.energy, "E, or 0 for the zero-energy limit"),
                  &sw.energy);
  sw_overlay.bind("engine", sweep_cmd->add_option("--engine", sw.engine, "analytic|numeric"), &sw.engine);
  sw_overlay.bind("out", sweep_cmd->add_option("--out", sw.out, "output file"), &sw.out);
  sw_overlay.bind("format", sweep_cmd->add_option("--format", sw.format, "csv|json"), &sw.format);
  sw_overlay.bind("slabs", sweep_cmd->add_option("--slabs", sw.slabs, "slabs across the support"), &sw.slabs);
  sw_overlay.bind("threads", sweep_cmd->add_option("--threads", sw.threads, "worker threads, 0 = all cores"),
                  &sw.threads);
  sweep_cmd->add_option("--param", sw.params, "fixed parameter name=value (repeatable)");
  sweep_cmd->add_option("--config", sw.config, "key = value file; flags override it");

  std::string figure_name;
  std::string out_dir = ".";
  bool list = false;
  unsigned threads = 0;
  auto* figure_cmd = app.add_subcommand("figure", "write the data behind a reference figure");
  figure_cmd->add_option("preset", figure_name, "fig1b|fig2a|fig2b|fig3|fig4a|fig4b|fig5a|fig5b");
  figure_cmd->add_option("--out-dir", out_dir, "output directory");
  figure_cmd->add_flag("--list", list, "list presets");
  figure_cmd->add_option("--threads", threads, "worker threads, 0 = all cores");

  HbsArgs hb;
  ConfigOverlay hb_overlay;
  auto* hbs_cmd = app.add_subcommand("hbs", "locate half bound states along a parameter");
  hb_overlay.bind("family", hbs_cmd->add_option("--family", hb.family, "dddp|scarf2|square-wb|sin2-wb"), &hb.family);
  hb_overlay.bind("vary", hbs_cmd->add_option("--vary", hb.vary, "parameter to scan"), &hb.vary);
  hb_overlay.bind("range", hbs_cmd->add_option("--range", hb.range, "lo:hi"), &hb.range);
  hb_overlay.bind("scan", hbs_cmd->add_option("--scan", hb.scan, "scan points"), &hb.scan);
  hb_overlay.bind("tol", hbs_cmd->add_option("--tol", hb.tol, "bisection tolerance"), &hb.tol);
  hb_overlay.bind("slabs", hbs_cmd->add_option("--slabs", hb.slabs, "slabs across the support"), &hb.slabs);
  hbs_cmd->add_option("--param", hb.params, "fixed parameter name=value (repeatable)");
  hbs_cmd->add_option("--config", hb.config, "key = value file; flags override it");

  BoundArgs bd;
  ConfigOverlay bd_overlay;
  auto* bound_cmd = app.add_subcommand("boundstates", "bound energies below zero");
  bd_overlay.bind("family", bound_cmd->add_option("--family", bd.family, "dddp|scarf2|square-wb|sin2-wb"),
                  &bd.family);
  bd_overlay.bind("emin", bound_cmd->add_option("--emin", bd.emin, "lower end of the energy search"), &bd.emin);
  bd_overlay.bind("slabs", bound_cmd->add_option("--slabs", bd.slabs, "slabs across the support"), &bd.slabs);
  bound_cmd->add_option("--param", bd.params, "parameter name=value (repeatable)");
  bound_cmd->add_option("--config", bd.config, "key = value file; flags override it");

  WaveArgs wv;
  auto* wave_cmd = app.add_subcommand("wavefunction", "sample a Scarf II eigenfunction");
  wave_cmd->add_option("--family", wv.family, "scarf2");
  wave_cmd->add_option("--s", wv.s, "shape parameter s");
  wave_cmd->add_option("--q", wv.q, "shape parameter q");
  wave_cmd->add_option("--n", wv.n, "state index (n = q for the half bound state)");
  wave_cmd->add_option("--x-range", wv.x_range, "lo:hi");
  wave_cmd->add_option("--points", wv.points, "sample count");
  wave_cmd->add_option("--out", wv.out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (sweep_cmd->parsed()) {
      sw_overlay.apply(sw.config);
      return run_sweep(sw, sw_overlay);
    }
    if (figure_cmd->parsed()) return run_figure(figure_name, out_dir, list, threads);
    if (hbs_cmd->parsed()) {
      hb_overlay.apply(hb.config);
      return run_hbs(hb, hb_overlay);
    }
    if (bound_cmd->parsed()) {
      bd_overlay.apply(bd.config);
      return run_boundstates(bd, bd_overlay);
    }
    if (wave_cmd->parsed()) return run_wavefunction(wv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
