#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <random>

#include <fmt/format.h>

#include "mellinlab/dirichlet.hpp"
#include "mellinlab/gl2.hpp"
#include "mellinlab/mellin.hpp"
#include "mellinlab/special_fn.hpp"
#include "mellinlab/voronoi.hpp"
#include "output.hpp"

namespace mellinlab::cli {
namespace {

struct Worst {
  std::string name;
  int points = 0;
  double residual = 0;
  cplx at{};
  void see(double r, cplx s) {
    ++points;
    if (!(r <= residual)) residual = r, at = s;
  }
};

void add_summary(Table& t, const Worst& w, double tol) {
  t.add({w.name, static_cast<long long>(w.points), w.residual, w.at, tol, std::string(w.residual < tol ? "pass" : "FAIL")});
}

Table summary_table() { return Table("summary", {"check", "points", "max_residual", "worst_point", "tolerance", "status"}); }

TestFunction named_function(const std::string& name) {
  if (name == "gaussian") return gaussian();
  if (name == "x_gaussian") return x_gaussian();
  throw ConfigError("unknown function '" + name + "' (gaussian, x_gaussian)");
}

std::vector<double> parse_reals(const std::string& list) {
  std::vector<double> out;
  for (const auto& item : split_list(list)) {
    cplx z = parse_complex(item);
    if (z.imag() != 0) throw ConfigError("expected a real number, got '" + item + "'");
    out.push_back(z.real());
  }
  return out;
}

std::vector<cplx> parse_points(const std::vector<std::string>& items) {
  std::vector<cplx> out;
  for (const auto& item : items)
    for (const auto& piece : split_list(item)) out.push_back(parse_complex(piece));
  return out;
}

}  // namespace

int cmd_gamma_identities(const RunConfig& config, std::ostream& out) {
  const double tol = config.tolerance_or(1e-10);
  std::mt19937_64 rng(config.seed);
  std::uniform_real_distribution<double> radius(0.5, 30.0), angle(0.0, 2.0 * pi);

  Worst fe0{"kernel_reflection_even"}, fe1{"kernel_reflection_odd"}, sh0{"kernel_shift_even"}, sh1{"kernel_shift_odd"};
  while (fe0.points < 200) {
    cplx s = std::polar(radius(rng), angle(rng));
    if (distance_to_gamma_poles(s) < 0.3 || distance_to_gamma_poles(1.0 - s) < 0.3) continue;
    for (Parity d : {even, odd}) {
      double r = std::abs(g_delta(s, d) * g_delta(1.0 - s, d) - d.sign());
      (d.odd() ? fe1 : fe0).see(r, s);
      if (distance_to_gamma_poles(s + 1.0) < 0.3) continue;
      cplx lhs = s * g_delta(s, d), rhs = -2.0 * pi * I * g_delta(s + 1.0, d + 1);
      (d.odd() ? sh1 : sh0).see(std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs)), s);
    }
  }

  Worst sep{"gamma_separation"};
  std::uniform_real_distribution<double> sre(-2.5, 2.5), sim(-2.0, 2.0), bre(-1.5, 1.5), bim(-1.0, 1.0);
  while (sep.points < 100) {
    cplx s{sre(rng), sim(rng)}, beta{bre(rng), bim(rng)};
    if (std::abs(beta - std::nearbyint(beta.real())) < 0.1) continue;
    if (distance_to_gamma_poles(s) < 0.3 || distance_to_gamma_poles(s + beta) < 0.3) continue;
    sep.see(separation_identity_residual(s, beta), s);
  }

  Table t = summary_table();
  bool ok = true;
  for (const auto* w : {&fe0, &fe1, &sh0, &sh1, &sep}) {
    add_summary(t, *w, tol);
    ok = ok && w->residual < tol;
    if (w->residual >= tol)
      std::cerr << fmt::format("identity {} violated at s = {} (residual {:.3g})\n", w->name, format_complex(w->at),
                               w->residual);
  }
  t.write(out, config.format);
  return ok ? exit_pass : exit_residual;
}

int cmd_zeta(const std::vector<std::string>& items, const RunConfig& config, std::ostream& out) {
  const double tol = config.tolerance_or(1e-9);
  std::vector<cplx> points = items.empty() ? std::vector<cplx>{2.0, {3.0, 4.0}, {0.5, 14.134725}, {-1.5, 2.0}}
                                           : parse_points(items);
  Table t("zeta", {"s", "zeta_s", "zeta_1_minus_s", "g0_s", "residual", "status"});
  bool ok = true;
  for (cplx s : points) {
    try {
      cplx z = riemann_zeta(s), zr = riemann_zeta(1.0 - s), g = g_delta(s, even);
      double r = std::abs(zr - g * z);
      ok = ok && r < tol;
      t.add({s, z, zr, g, r, std::string(r < tol ? "pass" : "FAIL")});
    } catch (const PoleError& e) {
      std::cerr << fmt::format("warning: s = {} skipped: {}\n", format_complex(s), e.what());
    }
  }
  t.write(out, config.format);
  return ok ? exit_pass : exit_residual;
}

int cmd_dirichlet(const DirichletOptions& options, const RunConfig& config, std::ostream& out) {
  const double tol = config.tolerance_or(1e-8);
  if (options.characters_only) {
    for (int q : options.moduli)
      for (const auto& chi : characters_mod(q)) out << character_to_json(chi) << '\n';
    return exit_pass;
  }
  std::vector<cplx> grid;
  for (double re : {-0.5, 0.25, 0.5, 1.5, 2.5})
    for (double im : {-3.0, 0.0, 1.5, 6.0}) grid.emplace_back(re, im);

  Table fe("functional_equation", {"q", "index", "delta", "s", "l_1_minus_s", "rhs", "residual", "status"});
  Table gs("gauss_sum", {"q", "index", "abs_gauss_sum", "sqrt_q", "deviation", "status"});
  bool ok = true;
  for (int q : options.moduli) {
    for (const auto& chi : characters_mod(q)) {
      if (!chi.primitive()) continue;
      double dev = std::abs(std::abs(gauss_sum(chi)) - std::sqrt(double(q)));
      ok = ok && dev < 1e-12;
      gs.add({static_cast<long long>(q), static_cast<long long>(chi.index()), std::abs(gauss_sum(chi)),
              std::sqrt(double(q)), dev, std::string(dev < 1e-12 ? "pass" : "FAIL")});
      for (cplx s : grid) {
        cplx lhs = dirichlet_l(1.0 - s, chi), rhs = dirichlet_functional_rhs(s, chi);
        double r = std::abs(lhs - rhs);
        ok = ok && r < tol;
        fe.add({static_cast<long long>(q), static_cast<long long>(chi.index()),
                static_cast<long long>(chi.parity().value()), s, lhs, rhs, r, std::string(r < tol ? "pass" : "FAIL")});
      }
    }
  }
  fe.write(out, config.format);
  gs.write(out, config.format);
  return ok ? exit_pass : exit_residual;
}

int cmd_gl2(const Gl2Options& options, const RunConfig& config, std::ostream& out) {
  if (options.write_delta > 0) {
    write_coefficients(out, delta_data(options.write_delta));
    return exit_pass;
  }
  const double tol = config.tolerance_or(1e-5);
  AutomorphicData data =
      options.coefficient_file.empty() ? delta_data(options.terms) : load_coefficients(options.coefficient_file);
  DiagnosticGrid grid;
  ConverseReport rep = converse_diagnostic(data, grid, tol, options.terms);

  Table field("residual_field", {"s", "l_s", "residual"});
  if (rep.failure.empty() || rep.finite) {
    for (double re : grid.re_values)
      for (double im : grid.im_values) {
        cplx s{re, im};
        field.add({s, l_value(s, data, options.terms, options.split),
                   gl2_functional_residual(s, data, options.terms, options.split)});
      }
  }
  Table lines("lines", {"re_s", "max_abs_l", "max_abs_kernel_l", "max_residual"});
  for (const auto& l : rep.lines) lines.add({l.re, l.max_l, l.max_kernel_l, l.max_residual});
  Table summary("summary", {"kind", "nu", "delta", "growth_exponent", "max_residual", "tolerance", "status", "note"});
  summary.add({to_string(data.kind), data.nu, static_cast<long long>(data.delta.value()), rep.growth_exponent,
               rep.max_residual, tol, std::string(rep.passed ? "pass" : "FAIL"), rep.failure});
  field.write(out, config.format);
  lines.write(out, config.format);
  summary.write(out, config.format);
  return rep.passed ? exit_pass : exit_residual;
}

namespace {

void write_types(std::ostream& out, const RunConfig& config, const std::vector<SingularityType>& types) {
  Table t("predicted", {"alpha", "eta", "log_index"});
  for (const auto& s : types) t.add({s.alpha, static_cast<long long>(s.eta.value()), static_cast<long long>(s.log_index)});
  t.write(out, config.format);
}

int report_expansion(const ExpansionReport& rep, const RunConfig& config, std::ostream& out) {
  const double tol = config.tolerance_or(1e-6);
  write_types(out, config, rep.predicted);
  Table leading("leading", {"exponent", "predicted_log_index", "extracted_log_index"});
  Table terms("extracted", {"exponent", "log_index", "coefficient"});
  for (const auto& t : rep.terms) terms.add({t.type.alpha, static_cast<long long>(t.type.log_index), t.coefficient});
  for (std::size_t i = 0; i < rep.leading.size(); ++i)
    leading.add({rep.leading[i].exponent, static_cast<long long>(rep.expected[i].max_log_index),
                 static_cast<long long>(rep.leading[i].max_log_index)});
  terms.write(out, config.format);
  leading.write(out, config.format);
  bool ok = rep.exact_match && rep.radius_stability < tol && rep.remainder_ok;
  Table summary("summary", {"exact_match", "radius_stability", "remainder_exponent", "tolerance", "status"});
  summary.add({std::string(rep.exact_match ? "yes" : "no"), rep.radius_stability, rep.remainder_exponent, tol,
               std::string(ok ? "pass" : "FAIL")});
  summary.write(out, config.format);
  return ok ? exit_pass : exit_residual;
}

}  // namespace

int cmd_voronoi(const VoronoiOptions& o, const RunConfig& config, std::ostream& out) {
  auto samples = parse_reals(o.x_samples);
  Parity eta(o.eta);
  TestFunction f = eta.odd() ? x_gaussian() : gaussian();
  switch (o.mode) {
    case VoronoiOptions::Mode::gl2: {
      cplx nu = parse_complex(o.nu);
      return report_expansion(
          verify_expansion(gl2_profile(f, nu, eta, config.quadrature), eta, predict_gl2_singularity_types(nu), o.depth,
                           samples),
          config, out);
    }
    case VoronoiOptions::Mode::gl3: {
      auto lambdas = split_list(o.lambdas);
      auto deltas = parse_reals(o.deltas);
      if (lambdas.size() != 3 || deltas.size() != 3) throw ConfigError("--lambdas and --deltas need three entries");
      GL3Params p;
      for (std::size_t j = 0; j < 3; ++j) {
        p.lambdas[j] = parse_complex(lambdas[j]);
        if (deltas[j] != 0 && deltas[j] != 1) throw ConfigError("--deltas entries must be 0 or 1");
        p.deltas[j] = Parity(static_cast<int>(deltas[j]));
      }
      p.eta = eta;
      return report_expansion(
          verify_expansion(gl3_profile(f, p, config.quadrature), eta, predict_singularity_types(p), o.depth, samples),
          config, out);
    }
    case VoronoiOptions::Mode::talpha: {
      const double tol = config.tolerance_or(1e-6);
      KernelParams kp{parse_complex(o.alpha), eta};
      Table t("routes", {"alpha", "eta", "y", "direct", "mellin", "difference", "status"});
      bool ok = true;
      for (double y : parse_reals(o.ys)) {
        cplx d = t_alpha_direct(f, kp, y, config.quadrature);
        cplx m = t_alpha_mellin_total(f, kp, y, config.contour);
        double diff = std::abs(d - m);
        ok = ok && diff < tol;
        t.add({kp.alpha, static_cast<long long>(eta.value()), y, d, m, diff, std::string(diff < tol ? "pass" : "FAIL")});
      }
      t.write(out, config.format);
      return ok ? exit_pass : exit_residual;
    }
  }
  return exit_config;
}

int cmd_mellin(const MellinOptions& o, const RunConfig& config, std::ostream& out) {
  const double tol = config.tolerance_or(1e-7);
  TestFunction f = named_function(o.function);
  Parity delta = f.parity().value_or(even);
  auto profile = mellin_profile(f, delta, config.quadrature);
  bool ok = true;

  auto range = o.residues.find("..");
  int lo = 0, hi = -1;
  try {
    if (range != std::string::npos)
      lo = std::stoi(o.residues.substr(0, range)), hi = std::stoi(o.residues.substr(range + 2));
    else if (!o.residues.empty())
      lo = hi = std::stoi(o.residues);
  } catch (const std::exception&) {
    throw ConfigError("--residues expects N or A..B");
  }
  Table res("residues", {"n", "s", "residue", "closed_form", "residual", "status"});
  for (int n = std::max(lo, 0); n <= hi; ++n) {
    if (Parity(n) != delta) continue;
    cplx numeric = laurent_coefficients(profile, -double(n), 1).front();
    cplx closed = mellin_residue(f, delta, n);
    double r = std::abs(numeric - closed);
    ok = ok && r < tol;
    res.add({static_cast<long long>(n), cplx(-n), numeric, closed, r, std::string(r < tol ? "pass" : "FAIL")});
  }
  res.write(out, config.format);

  Table inv("inversion", {"x", "f_x", "inverted", "error", "status"});
  VerticalContour c = config.contour;
  c.abscissa = profile.default_abscissa(c.pole_clearance);
  for (double x : parse_reals(o.invert)) {
    cplx fx = f(x), back = mellin_invert(profile, delta, x, c);
    double e = std::abs(fx - back);
    ok = ok && e < tol;
    inv.add({x, fx, back, e, std::string(e < tol ? "pass" : "FAIL")});
  }
  inv.write(out, config.format);
  return ok ? exit_pass : exit_residual;
}

}  // namespace mellinlab::cli
