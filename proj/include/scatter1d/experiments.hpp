#pragma once

// Parameter sweeps over the potential families and their flat-file exports.

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "scatter1d/potential.hpp"
#include "scatter1d/transfer.hpp"

namespace scatter1d {

inline constexpr std::string_view kVersion = "scatter1d 1.0.0";

enum class Family { Dddp, Scarf2, SquareWb, Sin2Wb };
enum class Engine { Analytic, Numeric };
enum class Format { Csv, Json };

Family parse_family(std::string_view name);
std::string_view family_key(Family f);
Engine parse_engine(std::string_view name);
std::string_view engine_key(Engine e);
Format parse_format(std::string_view name);

using ParamMap = std::map<std::string, double>;

/// Parameters accepted by a family. Besides the geometric ones:
///   dddp      hbs != 0 ties u2 to the half-bound-state value u1/(1 - u1 a)
///   *-wb      q sets u1 = (q/w)^2, eta sets u2 = eta u1
std::vector<std::string> param_names(Family f);
ParamMap default_params(Family f);

/// Defaults overlaid with `params`; unknown keys throw std::invalid_argument.
PotentialSpec build_potential(Family f, const ParamMap& params);

struct SweepRequest {
  Family family = Family::Scarf2;
  std::string vary;
  double lo = 0.0;
  double hi = 1.0;
  int steps = 2;
  double energy = 0.01;  // 0 requests the zero-energy limit
  Engine engine = Engine::Numeric;
  ParamMap params;  // fixed parameters, overriding the family defaults
  int n_slabs = kDefaultSlabs;
  unsigned threads = 0;  // 0: hardware concurrency
  std::string label;
};

struct SweepRecord {
  double param = 0.0;
  double E = 0.0;
  double R = 0.0;
  double T = 0.0;
  bool converged = true;
};

struct SweepMetadata {
  std::string label;
  std::string family;
  std::string vary;
  std::string engine;
  std::string version;
  ParamMap params;
  double lo = 0.0;
  double hi = 0.0;
  double energy = 0.0;
  int steps = 0;
  int n_slabs = 0;
};

struct SweepTable {
  SweepMetadata meta;
  std::vector<SweepRecord> records;

  bool all_converged() const;
};

bool operator==(const SweepRecord& a, const SweepRecord& b);
bool operator==(const SweepMetadata& a, const SweepMetadata& b);
bool operator==(const SweepTable& a, const SweepTable& b);

/// R and T at one parameter point through the selected engine.
SweepRecord evaluate_point(Family f, const ParamMap& params, double energy, Engine engine, int n_slabs);

/// Uniform grid lo..hi (inclusive) of `steps` points. Points run concurrently;
/// records come back in grid order.
SweepTable sweep(const SweepRequest& req);

std::string to_csv(const SweepTable& table);
std::string to_json_text(const SweepTable& table);
SweepTable table_from_json_text(std::string_view text);

/// Writes the table; I/O failures throw std::runtime_error naming the path.
void export_table(const SweepTable& table, const std::filesystem::path& path, Format format);
SweepTable read_table_json(const std::filesystem::path& path);

/// Writes `contents` byte for byte.
void write_text_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace scatter1d
