#include "scatter1d/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"
#include "scatter1d/dddp.hpp"
#include "scatter1d/scarf.hpp"

namespace scatter1d {

namespace {

using json = nlohmann::json;

std::string fmt12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace

Family parse_family(std::string_view name) {
  if (name == "dddp") return Family::Dddp;
  if (name == "scarf2") return Family::Scarf2;
  if (name == "square-wb") return Family::SquareWb;
  if (name == "sin2-wb") return Family::Sin2Wb;
  throw std::invalid_argument("unknown family '" + std::string(name) + "' (dddp|scarf2|square-wb|sin2-wb)");
}

std::string_view family_key(Family f) {
  switch (f) {
    case Family::Dddp: return "dddp";
    case Family::Scarf2: return "scarf2";
    case Family::SquareWb: return "square-wb";
    case Family::Sin2Wb: return "sin2-wb";
  }
  return "";
}

Engine parse_engine(std::string_view name) {
  if (name == "analytic") return Engine::Analytic;
  if (name == "numeric") return Engine::Numeric;
  throw std::invalid_argument("unknown engine '" + std::string(name) + "' (analytic|numeric)");
}

std::string_view engine_key(Engine e) { return e == Engine::Analytic ? "analytic" : "numeric"; }

Format parse_format(std::string_view name) {
  if (name == "csv") return Format::Csv;
  if (name == "json") return Format::Json;
  throw std::invalid_argument("unknown format '" + std::string(name) + "' (csv|json)");
}

std::vector<std::string> param_names(Family f) {
  switch (f) {
    case Family::Dddp: return {"u1", "u2", "a", "hbs"};
    case Family::Scarf2: return {"s", "q"};
    case Family::SquareWb:
    case Family::Sin2Wb: return {"u1", "u2", "w", "a", "q", "eta"};
  }
  return {};
}

ParamMap default_params(Family f) {
  switch (f) {
    case Family::Dddp: return {{"u1", 1.0}, {"u2", 2.0}, {"a", 0.5}, {"hbs", 0.0}};
    case Family::Scarf2: return {{"s", 0.2}, {"q", 1.0}};
    case Family::SquareWb: return {{"u1", 1.0}, {"u2", 1.0}, {"w", 1.0}, {"a", 0.0}};
    case Family::Sin2Wb: return {{"u1", 1.0}, {"u2", 1.0}, {"w", 1.0}, {"a", 1.0}};
  }
  return {};
}

PotentialSpec build_potential(Family f, const ParamMap& params) {
  const auto names = param_names(f);
  for (const auto& [key, value] : params) {
    if (std::find(names.begin(), names.end(), key) == names.end()) {
      throw std::invalid_argument("parameter '" + key + "' is not defined for family " +
                                  std::string(family_key(f)));
    }
    if (!std::isfinite(value)) throw std::invalid_argument("parameter '" + key + "' must be finite");
  }
  ParamMap m = default_params(f);
  for (const auto& [key, value] : params) m[key] = value;

  PotentialSpec p;
  switch (f) {
    case Family::Dddp: {
      DeltaPair d{m["u1"], m["u2"], m["a"]};
      if (m["hbs"] != 0.0) d.u2 = dddp_hbs_u2(d.u1, d.a);
      p = d;
      break;
    }
    case Family::Scarf2: p = ScarfII{m["s"], m["q"]}; break;
    case Family::SquareWb:
    case Family::Sin2Wb: {
      const double w = m["w"];
      double u1 = m["u1"];
      double u2 = m["u2"];
      if (m.count("q")) u1 = (m["q"] / w) * (m["q"] / w);
      if (m.count("eta")) u2 = m["eta"] * u1;
      if (f == Family::SquareWb) {
        p = SquareWellBarrier{u1, u2, w, m["a"]};
      } else {
        p = SinSquaredWellBarrier{u1, u2, w, m["a"]};
      }
      break;
    }
  }
  validate(p);
  return p;
}

bool SweepTable::all_converged() const {
  return std::all_of(records.begin(), records.end(), [](const SweepRecord& r) { return r.converged; });
}

bool operator==(const SweepRecord& a, const SweepRecord& b) {
  return a.param == b.param && a.E == b.E && a.R == b.R && a.T == b.T && a.converged == b.converged;
}

bool operator==(const SweepMetadata& a, const SweepMetadata& b) {
  return a.label == b.label && a.family == b.family && a.vary == b.vary && a.engine == b.engine &&
         a.version == b.version && a.params == b.params && a.lo == b.lo && a.hi == b.hi && a.energy == b.energy &&
         a.steps == b.steps && a.n_slabs == b.n_slabs;
}

bool operator==(const SweepTable& a, const SweepTable& b) { return a.meta == b.meta && a.records == b.records; }

SweepRecord evaluate_point(Family f, const ParamMap& params, double energy, Engine engine, int n_slabs) {
  if (!(energy >= 0.0)) throw std::invalid_argument("sweep energy must be >= 0");
  const PotentialSpec p = build_potential(f, params);
  SweepRecord rec;
  rec.E = energy;
  if (engine == Engine::Analytic) {
    if (const auto* d = std::get_if<DeltaPair>(&p)) {
      if (energy > 0.0) {
        rec.R = dddp_R(*d, energy);
      } else {
        rec.R = dddp_on_hbs_manifold(*d) ? dddp_R0_at_hbs(d->u1, d->a) : 1.0;
      }
      rec.T = 1.0 - rec.R;
    } else if (const auto* s = std::get_if<ScarfII>(&p)) {
      if (energy > 0.0) {
        const ProbabilityPair rt = scarf_probabilities(*s, energy);
        rec.R = rt.R;
        rec.T = rt.T;
      } else if (is_integer_q(s->q)) {
        rec.R = scarf_R0(s->s);
        rec.T = scarf_T0(s->s);
      } else {
        rec.R = 1.0;
        rec.T = 0.0;
      }
    } else {
      throw std::invalid_argument("no closed form for family " + std::string(family_key(f)) +
                                  "; use the numeric engine");
    }
    return rec;
  }
  if (energy > 0.0) {
    const ScatteringResult res = scattering(p, energy, n_slabs);
    rec.R = res.R;
    rec.T = res.T;
  } else {
    const ZeroEnergyReflection z = reflection_at_zero(p, n_slabs);
    rec.R = z.R;
    rec.T = 1.0 - z.R;
    rec.converged = z.converged;
  }
  return rec;
}

SweepTable sweep(const SweepRequest& req) {
  if (req.steps < 2) throw std::invalid_argument("sweep needs at least 2 steps");
  if (!(req.hi > req.lo)) throw std::invalid_argument("sweep range must satisfy lo < hi");
  const auto names = param_names(req.family);
  if (std::find(names.begin(), names.end(), req.vary) == names.end()) {
    throw std::invalid_argument("cannot vary '" + req.vary + "' for family " + std::string(family_key(req.family)));
  }
  if (req.engine == Engine::Analytic && (req.family == Family::SquareWb || req.family == Family::Sin2Wb)) {
    throw std::invalid_argument("no closed form for family " + std::string(family_key(req.family)) +
                                "; use the numeric engine");
  }

  SweepTable table;
  table.meta.label = req.label;
  table.meta.family = std::string(family_key(req.family));
  table.meta.vary = req.vary;
  table.meta.engine = std::string(engine_key(req.engine));
  table.meta.version = std::string(kVersion);
  table.meta.params = req.params;
  table.meta.params.erase(req.vary);
  table.meta.lo = req.lo;
  table.meta.hi = req.hi;
  table.meta.energy = req.energy;
  table.meta.steps = req.steps;
  table.meta.n_slabs = req.n_slabs;
  table.records.resize(static_cast<std::size_t>(req.steps));

  const auto grid_value = [&](int i) {
    return i == req.steps - 1 ? req.hi : req.lo + (req.hi - req.lo) * i / (req.steps - 1);
  };
  const auto run_point = [&](int i) {
    ParamMap params = table.meta.params;
    const double theta = grid_value(i);
    params[req.vary] = theta;
    SweepRecord rec = evaluate_point(req.family, params, req.energy, req.engine, req.n_slabs);
    rec.param = theta;
    table.records[static_cast<std::size_t>(i)] = rec;
  };

  unsigned workers = req.threads ? req.threads : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(req.steps));
  if (workers <= 1) {
    for (int i = 0; i < req.steps; ++i) run_point(i);
    return table;
  }

  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (int i = static_cast<int>(w); i < req.steps; i += static_cast<int>(workers)) run_point(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
  return table;
}

std::string to_csv(const SweepTable& table) {
  std::string out = "param,E,R,T,converged\n";
  for (const SweepRecord& r : table.records) {
    out += fmt12(r.param) + ',' + fmt12(r.E) + ',' + fmt12(r.R) + ',' + fmt12(r.T) + ',' + (r.converged ? '1' : '0') +
           '\n';
  }
  return out;
}

std::string to_json_text(const SweepTable& table) {
  const SweepMetadata& m = table.meta;
  json meta = {{"label", m.label},   {"family", m.family}, {"vary", m.vary},   {"engine", m.engine},
               {"version", m.version}, {"params", m.params}, {"lo", m.lo},       {"hi", m.hi},
               {"energy", m.energy}, {"steps", m.steps},   {"n_slabs", m.n_slabs}};
  json records = json::array();
  for (const SweepRecord& r : table.records) {
    records.push_back({{"param", r.param}, {"E", r.E}, {"R", r.R}, {"T", r.T}, {"converged", r.converged}});
  }
  return json{{"metadata", meta}, {"records", records}}.dump(2) + "\n";
}

SweepTable table_from_json_text(std::string_view text) {
  const json doc = json::parse(text);
  SweepTable table;
  const json& m = doc.at("metadata");
  table.meta.label = m.at("label").get<std::string>();
  table.meta.family = m.at("family").get<std::string>();
  table.meta.vary = m.at("vary").get<std::string>();
  table.meta.engine = m.at("engine").get<std::string>();
  table.meta.version = m.at("version").get<std::string>();
  table.meta.params = m.at("params").get<ParamMap>();
  table.meta.lo = m.at("lo").get<double>();
  table.meta.hi = m.at("hi").get<double>();
  table.meta.energy = m.at("energy").get<double>();
  table.meta.steps = m.at("steps").get<int>();
  table.meta.n_slabs = m.at("n_slabs").get<int>();
  for (const json& r : doc.at("records")) {
    table.records.push_back({r.at("param").get<double>(), r.at("E").get<double>(), r.at("R").get<double>(),
                             r.at("T").get<double>(), r.at("converged").get<bool>()});
  }
  return table;
}

void write_text_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  out.close();
  if (!out) throw std::runtime_error("failed writing '" + path.string() + "'");
}

void export_table(const SweepTable& table, const std::filesystem::path& path, Format format) {
  write_text_file(path, format == Format::Csv ? to_csv(table) : to_json_text(table));
}

SweepTable read_table_json(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  return table_from_json_text(buf.str());
}

}  // namespace scatter1d
