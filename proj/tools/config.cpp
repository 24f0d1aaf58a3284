#include "config.hpp"

#include <fstream>

#include <fmt/format.h>

namespace mellinlab::cli {
namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double to_double(const std::string& key, const std::string& v) {
  try {
    std::size_t used = 0;
    double d = std::stod(v, &used);
    if (used == v.size()) return d;
  } catch (const std::exception&) {
  }
  throw ConfigError(fmt::format("config: {} expects a number, got '{}'", key, v));
}

int to_int(const std::string& key, const std::string& v) {
  double d = to_double(key, v);
  if (d != static_cast<int>(d)) throw ConfigError(fmt::format("config: {} expects an integer", key));
  return static_cast<int>(d);
}

}  // namespace

OutputFormat parse_format(const std::string& name) {
  if (name == "table") return OutputFormat::table;
  if (name == "csv") return OutputFormat::csv;
  if (name == "json-lines") return OutputFormat::json_lines;
  throw ConfigError("unknown format '" + name + "' (table, csv, json-lines)");
}

void apply_setting(RunConfig& c, const std::string& key, const std::string& value) {
  if (key == "tolerance")
    c.tolerance = to_double(key, value);
  else if (key == "contour.half_height")
    c.contour.half_height = to_double(key, value);
  else if (key == "contour.nodes")
    c.contour.nodes_per_panel = to_int(key, value);
  else if (key == "contour.clearance")
    c.contour.pole_clearance = to_double(key, value);
  else if (key == "quadrature.nodes")
    c.quadrature.nodes_per_panel = to_int(key, value);
  else if (key == "quadrature.panel_width")
    c.quadrature.panel_width = to_double(key, value);
  else if (key == "format")
    c.format = parse_format(value);
  else if (key == "seed")
    c.seed = static_cast<std::uint64_t>(to_int(key, value));
  else if (key == "out")
    c.out_path = value;
  else
    throw ConfigError("config: unknown key '" + key + "'");
}

void apply_config_file(RunConfig& c, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError(fmt::format("{}:{}: expected key=value", path, line_no));
    apply_setting(c, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
}

void RunConfig::validate() const {
  if (tolerance && !(*tolerance > 0)) throw ConfigError("tolerance must be positive");
  if (contour.nodes_per_panel < 16 || quadrature.nodes_per_panel < 16)
    throw ConfigError("node counts must be at least 16");
  if (!(contour.half_height > 0) || !(contour.pole_clearance > 0) || !(quadrature.panel_width > 0))
    throw ConfigError("contour and panel sizes must be positive");
}

}  // namespace mellinlab::cli
