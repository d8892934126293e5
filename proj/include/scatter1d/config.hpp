#pragma once

// Plain `key = value` configuration files and the small value grammars used
// on the command line.

#include <filesystem>
#include <istream>
#include <map>
#include <string>
#include <string_view>
#include <utility>

namespace scatter1d {

using ConfigMap = std::map<std::string, std::string>;

/// One `key = value` per line; blank lines and lines starting with '#' are
/// skipped. Malformed lines throw std::invalid_argument with the line number.
ConfigMap parse_config(std::istream& in);
ConfigMap read_config_file(const std::filesystem::path& path);

/// Whole-string floating-point parse.
double parse_number(std::string_view text);

/// `lo:hi`.
std::pair<double, double> parse_range(std::string_view text);

/// `name=value`.
std::pair<std::string, double> parse_param(std::string_view text);

}  // namespace scatter1d
