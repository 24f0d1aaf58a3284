#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "commands.hpp"
#include "config.hpp"

using namespace mellinlab;
using namespace mellinlab::cli;

int main(int argc, char** argv) {
  CLI::App app{"Signed Mellin transforms, L-function functional equations and Voronoi-type kernels"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path, format, out_path;
  std::optional<double> tolerance;
  app.add_option("--config", config_path, "flat key=value config file");
  app.add_option("--format", format, "table, csv or json-lines");
  app.add_option("--tolerance", tolerance, "residual tolerance (command default when omitted)");
  app.add_option("--out", out_path, "write output here instead of stdout");
  app.footer(
      "Config keys: tolerance, contour.half_height, contour.nodes, contour.clearance, quadrature.nodes,\n"
      "quadrature.panel_width, format, seed, out. Flags override the file.\n"
      "Exit codes: 0 pass, 1 residual violation, 2 domain/pole error, 3 config error.\n"
      "Complex numbers are written as re+imj with 17 significant digits.");

  auto* gamma_cmd = app.add_subcommand("gamma-identities", "random-grid checks of the Gamma kernel identities");
  gamma_cmd->footer("columns: check, points, max_residual, worst_point, tolerance, status");

  std::vector<std::string> zeta_points;
  auto* zeta_cmd = app.add_subcommand("zeta", "zeta(1-s) = G_0(s) zeta(s) at given points");
  zeta_cmd->add_option("--s", zeta_points, "points, e.g. 2 or 0.5+14.134725j (repeatable or comma separated)");
  zeta_cmd->footer("columns: s, zeta_s, zeta_1_minus_s, g0_s, residual, status");

  DirichletOptions dir_opts;
  std::string moduli;
  auto* dir_cmd = app.add_subcommand("dirichlet", "functional equation of L(s, chi) for primitive characters");
  dir_cmd->add_option("--q", moduli, "moduli, comma separated (default 3,4,5,7,8)");
  dir_cmd->add_flag("--characters", dir_opts.characters_only, "only list the characters as JSON lines");
  dir_cmd->footer(
      "functional_equation columns: q, index, delta, s, l_1_minus_s, rhs, residual, status\n"
      "gauss_sum columns: q, index, abs_gauss_sum, sqrt_q, deviation, status");

  Gl2Options gl2_opts;
  auto* gl2_cmd = app.add_subcommand("gl2", "GL(2) L-function functional equation and growth diagnostic");
  gl2_cmd->add_option("--coeffs", gl2_opts.coefficient_file, "coefficient file (default: discriminant data)");
  gl2_cmd->add_option("--terms", gl2_opts.terms, "number of coefficients summed")->check(CLI::PositiveNumber);
  gl2_cmd->add_option("--split", gl2_opts.split, "split point of the smoothed sum")->check(CLI::PositiveNumber);
  gl2_cmd->add_option("--write-delta", gl2_opts.write_delta, "write N discriminant coefficients and stop");
  gl2_cmd->footer(
      "residual_field columns: s, l_s, residual\n"
      "lines columns: re_s, max_abs_l, max_abs_kernel_l, max_residual\n"
      "summary columns: kind, nu, delta, growth_exponent, max_residual, tolerance, status, note");

  VoronoiOptions vor;
  bool gl2_mode = false, gl3_mode = false, talpha_mode = false;
  auto* vor_cmd = app.add_subcommand("voronoi", "singularity types of the GL(2)/GL(3) kernels, or T_alpha routes");
  vor_cmd->add_flag("--gl2", gl2_mode, "GL(2) kernel with --nu");
  vor_cmd->add_flag("--gl3", gl3_mode, "GL(3) kernel with --lambdas/--deltas");
  vor_cmd->add_flag("--talpha", talpha_mode, "compare direct and Mellin routes of T_alpha at --ys");
  vor_cmd->add_option("--nu", vor.nu, "GL(2) spectral parameter");
  vor_cmd->add_option("--lambdas", vor.lambdas, "three complex parameters, comma separated");
  vor_cmd->add_option("--deltas", vor.deltas, "three parities, comma separated");
  vor_cmd->add_option("--eta", vor.eta, "parity of the input (0: Gaussian, 1: x Gaussian)")->check(CLI::Range(0, 1));
  vor_cmd->add_option("--depth", vor.depth, "expansion depth");
  vor_cmd->add_option("--x", vor.x_samples, "remainder sample points");
  vor_cmd->add_option("--alpha", vor.alpha, "T_alpha exponent");
  vor_cmd->add_option("--ys", vor.ys, "T_alpha evaluation points");
  vor_cmd->footer(
      "predicted columns: alpha, eta, log_index\n"
      "extracted columns: exponent, log_index, coefficient\n"
      "leading columns: exponent, predicted_log_index, extracted_log_index\n"
      "summary columns: exact_match, radius_stability, remainder_exponent, tolerance, status\n"
      "routes columns: alpha, eta, y, direct, mellin, difference, status");

  MellinOptions mel;
  auto* mel_cmd = app.add_subcommand("mellin", "residues and inversion round trip of M_delta f");
  mel_cmd->add_option("--function", mel.function, "gaussian or x_gaussian");
  mel_cmd->add_option("--residues", mel.residues, "range A..B of pole indices n (s = -n)");
  mel_cmd->add_option("--invert", mel.invert, "points for the inversion round trip");
  mel_cmd->footer(
      "residues columns: n, s, residue, closed_form, residual, status\n"
      "inversion columns: x, f_x, inverted, error, status");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? exit_pass : exit_config;
  }

  try {
    RunConfig config;
    if (!config_path.empty()) apply_config_file(config, config_path);
    if (!format.empty()) config.format = parse_format(format);
    if (tolerance) config.tolerance = tolerance;
    if (!out_path.empty()) config.out_path = out_path;
    config.validate();

    std::ofstream file;
    if (!config.out_path.empty()) {
      file.open(config.out_path);
      if (!file) throw ConfigError("cannot open output file " + config.out_path);
    }
    std::ostream& out = config.out_path.empty() ? std::cout : file;

    if (*gamma_cmd) return cmd_gamma_identities(config, out);
    if (*zeta_cmd) return cmd_zeta(zeta_points, config, out);
    if (*dir_cmd) {
      if (!moduli.empty()) {
        dir_opts.moduli.clear();
        for (const auto& m : CLI::detail::split(moduli, ',')) dir_opts.moduli.push_back(std::stoi(m));
      }
      return cmd_dirichlet(dir_opts, config, out);
    }
    if (*gl2_cmd) return cmd_gl2(gl2_opts, config, out);
    if (*vor_cmd) {
      if (gl2_mode + gl3_mode + talpha_mode > 1) throw ConfigError("choose one of --gl2, --gl3, --talpha");
      vor.mode = gl2_mode ? VoronoiOptions::Mode::gl2
                          : talpha_mode ? VoronoiOptions::Mode::talpha : VoronoiOptions::Mode::gl3;
      return cmd_voronoi(vor, config, out);
    }
    if (*mel_cmd) return cmd_mellin(mel, config, out);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return exit_config;
  } catch (const Error& e) {
    std::cerr << to_string(e.category()) << " error: " << e.what() << '\n';
    return exit_domain;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return exit_config;
  }
  return exit_config;
}
