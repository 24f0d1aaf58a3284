#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "config.hpp"

namespace mellinlab::cli {

/// Exit codes shared by all subcommands.
enum ExitCode : int { exit_pass = 0, exit_residual = 1, exit_domain = 2, exit_config = 3 };

int cmd_gamma_identities(const RunConfig& config, std::ostream& out);

int cmd_zeta(const std::vector<std::string>& points, const RunConfig& config, std::ostream& out);

struct DirichletOptions {
  std::vector<int> moduli{3, 4, 5, 7, 8};
  bool characters_only = false;
};
int cmd_dirichlet(const DirichletOptions& options, const RunConfig& config, std::ostream& out);

struct Gl2Options {
  std::string coefficient_file;  ///< empty: discriminant data
  int terms = 30;
  double split = 1.25;
  int write_delta = 0;  ///< > 0: write that many discriminant coefficients and stop
};
int cmd_gl2(const Gl2Options& options, const RunConfig& config, std::ostream& out);

struct VoronoiOptions {
  enum class Mode { gl2, gl3, talpha } mode = Mode::gl3;
  std::string nu = "0.3333333333333333";
  std::string lambdas = "0,0,0";
  std::string deltas = "0,0,0";
  int eta = 0;
  double depth = 1.5;
  std::string x_samples = "0.02,0.04,0.06,0.08,0.1";
  std::string alpha = "1.5";
  std::string ys = "0.5,1,-1.5";
};
int cmd_voronoi(const VoronoiOptions& options, const RunConfig& config, std::ostream& out);

struct MellinOptions {
  std::string function = "gaussian";
  std::string residues = "0..4";
  std::string invert = "0.25,0.5,1,1.5,-0.75";
};
int cmd_mellin(const MellinOptions& options, const RunConfig& config, std::ostream& out);

}  // namespace mellinlab::cli
