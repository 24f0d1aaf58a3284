#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "mellinlab/mellin.hpp"
#include "mellinlab/quadrature.hpp"

namespace mellinlab::cli {

enum class OutputFormat { table, csv, json_lines };

/// Settings shared by every subcommand. Flags override the config file.
struct RunConfig {
  std::optional<double> tolerance;  ///< per-command default when unset
  VerticalContour contour;
  QuadratureConfig quadrature;
  OutputFormat format = OutputFormat::table;
  std::uint64_t seed = 20240601;
  std::string out_path;  ///< empty: stdout

  double tolerance_or(double fallback) const { return tolerance.value_or(fallback); }
  /// Throws ConfigError when an invariant is violated.
  void validate() const;
};

/// Applies `key=value` lines from a file; '#' starts a comment.
void apply_config_file(RunConfig& config, const std::string& path);
/// Applies one key=value pair.
void apply_setting(RunConfig& config, const std::string& key, const std::string& value);

OutputFormat parse_format(const std::string& name);

}  // namespace mellinlab::cli
