#include "scatter1d/config.hpp"

#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <stdexcept>

namespace scatter1d {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

ConfigMap parse_config(std::istream& in) {
  ConfigMap out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string_view body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    const auto eq = body.find('=');
    if (eq == std::string_view::npos) {
      throw std::invalid_argument("config line " + std::to_string(lineno) + ": expected 'key = value'");
    }
    const std::string_view key = trim(body.substr(0, eq));
    const std::string_view value = trim(body.substr(eq + 1));
    if (key.empty()) throw std::invalid_argument("config line " + std::to_string(lineno) + ": empty key");
    out[std::string(key)] = std::string(value);
  }
  return out;
}

ConfigMap read_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read config file '" + path.string() + "'");
  return parse_config(in);
}

double parse_number(std::string_view text) {
  const std::string s(trim(text));
  if (s.empty()) throw std::invalid_argument("expected a number, got an empty string");
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size() || errno == ERANGE) {
    throw std::invalid_argument("'" + s + "' is not a number");
  }
  return v;
}

std::pair<double, double> parse_range(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw std::invalid_argument("range must look like lo:hi");
  return {parse_number(text.substr(0, colon)), parse_number(text.substr(colon + 1))};
}

std::pair<std::string, double> parse_param(std::string_view text) {
  const auto eq = text.find('=');
  if (eq == std::string_view::npos) throw std::invalid_argument("parameter must look like name=value");
  const std::string name(trim(text.substr(0, eq)));
  if (name.empty()) throw std::invalid_argument("parameter name is empty");
  return {name, parse_number(text.substr(eq + 1))};
}

}  // namespace scatter1d
