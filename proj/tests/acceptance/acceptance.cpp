// One pass/fail line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "mellinlab/dirichlet.hpp"
#include "mellinlab/gl2.hpp"
#include "mellinlab/mellin.hpp"
#include "mellinlab/special_fn.hpp"
#include "mellinlab/voronoi.hpp"

using namespace mellinlab;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

int failures = 0;

void criterion(int id, const std::string& name, double budget_s, const std::function<Outcome()>& body) {
  auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  bool ok = o.pass && dt < budget_s;
  if (!ok) ++failures;
  fmt::print("criterion {}: {} | {} | {} | {:.2f}s of {:.0f}s\n", id, ok ? "PASS" : "FAIL", name, o.detail, dt, budget_s);
  std::fflush(stdout);
}

Outcome kernel_functional_equation() {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> radius(0.5, 30.0), angle(0.0, 2.0 * pi);
  double worst = 0;
  int n = 0;
  while (n < 200) {
    cplx s = std::polar(radius(rng), angle(rng));
    if (distance_to_gamma_poles(s) < 0.3 || distance_to_gamma_poles(1.0 - s) < 0.3) continue;
    ++n;
    for (Parity d : {even, odd}) worst = std::max(worst, std::abs(g_delta(s, d) * g_delta(1.0 - s, d) - d.sign()));
  }
  return {worst < 1e-10, fmt::format("max residual {:.2e} over {} points, both parities", worst, n)};
}

Outcome gamma_separation() {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> sre(-2.5, 2.5), sim(-2.0, 2.0), bre(-1.5, 1.5), bim(-1.0, 1.0);
  double worst = 0;
  int n = 0;
  while (n < 100) {
    cplx s{sre(rng), sim(rng)}, beta{bre(rng), bim(rng)};
    if (std::abs(beta - std::nearbyint(beta.real())) < 0.1) continue;
    if (distance_to_gamma_poles(s) < 0.3 || distance_to_gamma_poles(s + beta) < 0.3) continue;
    ++n;
    worst = std::max(worst, separation_identity_residual(s, beta));
  }
  return {worst < 1e-10, fmt::format("max residual {:.2e} over {} points", worst, n)};
}

Outcome riemann_functional_equation() {
  double worst = 0;
  int n = 0;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 10; ++j) {
      cplx s{1.5 + 2.5 * i / 4.0, -10.0 + 20.0 * j / 9.0};
      worst = std::max(worst, zeta_functional_residual(s));
      ++n;
    }
  double spot = std::abs(riemann_zeta(-1.0) + 1.0 / 12.0);
  return {worst < 1e-9 && spot < 1e-11,
          fmt::format("max residual {:.2e} over {} points; |zeta(-1) + 1/12| = {:.2e}", worst, n, spot)};
}

Outcome dirichlet_functional_equations() {
  std::vector<cplx> grid;
  for (double re : {-0.5, 0.25, 0.5, 1.5, 2.5})
    for (double im : {-3.0, 0.0, 1.5, 6.0}) grid.emplace_back(re, im);
  double worst = 0, gauss_dev = 0;
  int chars = 0;
  for (int q : {3, 4, 5, 7, 8})
    for (const auto& chi : characters_mod(q)) {
      if (!chi.primitive()) continue;
      ++chars;
      gauss_dev = std::max(gauss_dev, std::abs(std::abs(gauss_sum(chi)) - std::sqrt(double(q))));
      for (cplx s : grid) worst = std::max(worst, dirichlet_functional_residual(s, chi));
    }
  return {worst < 1e-8 && gauss_dev < 1e-12,
          fmt::format("{} primitive characters, max residual {:.2e}, max ||g| - sqrt q| {:.2e}", chars, worst, gauss_dev)};
}

Outcome mellin_calculus() {
  // (a) derivative identity M_{d+1} f'(s) = -(s - 1) M_d f(s - 1)
  auto f = gaussian_polynomial({0.3, 1.0, -0.5}, 1.0);
  auto df = f.derived(1);
  double deriv = 0;
  for (double re : {-0.6, 0.4, 1.3, 2.2})
    for (double im : {-3.0, 0.5, 2.0})
      for (Parity d : {even, odd}) {
        cplx s{re, im};
        cplx lhs = signed_mellin(df, d + 1, s), rhs = -(s - 1.0) * signed_mellin(f, d, s - 1.0);
        deriv = std::max(deriv, std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs)));
      }
  // (b) residue at 0
  auto g = gaussian();
  double residue = std::abs(laurent_coefficients(mellin_profile(g, even), 0.0, 1).front() - 2.0);
  // (c) inversion round trip at 20 points
  double roundtrip = 0;
  for (auto [h, d] : {std::pair{gaussian(), even}, std::pair{x_gaussian(), odd}}) {
    auto profile = mellin_profile(h, d);
    VerticalContour c;
    c.abscissa = profile.default_abscissa();
    for (int i = 0; i < 10; ++i) {
      double x = (i % 2 ? -1.0 : 1.0) * (0.05 + 0.2 * i);
      roundtrip = std::max(roundtrip, std::abs(mellin_invert(profile, d, x, c) - h(x)));
    }
  }
  // (d) Fourier-Mellin relation
  double fm = 0;
  for (auto [h, d] : {std::pair{gaussian(), even}, std::pair{x_gaussian(), odd}})
    for (cplx s : {cplx{0.3, 1.0}, cplx{0.6, -2.5}, cplx{0.5, 4.0}}) fm = std::max(fm, fourier_mellin_relation_residual(h, d, s));
  bool ok = deriv < 1e-9 && residue < 1e-9 && roundtrip < 1e-7 && fm < 1e-8;
  return {ok, fmt::format("(a) {:.2e} (b) {:.2e} (c) {:.2e} (d) {:.2e}", deriv, residue, roundtrip, fm)};
}

Outcome transform_routes() {
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> are(0.5, 3.0), aim(-1.0, 1.0), y(-2.0, 2.0);
  std::bernoulli_distribution parity(0.5);
  auto f = gaussian();
  double worst = 0;
  for (int i = 0; i < 10; ++i) {
    KernelParams kp{{are(rng), aim(rng)}, Parity(parity(rng) ? 1 : 0)};
    double yy = y(rng);
    cplx d = t_alpha_direct(f, kp, yy), m = t_alpha_mellin_total(f, kp, yy);
    worst = std::max(worst, std::abs(d - m));
  }
  return {worst < 1e-6, fmt::format("max |direct - mellin| {:.2e} over 10 draws", worst)};
}

Outcome singularity_classification() {
  const std::vector<double> samples{0.02, 0.04, 0.06, 0.08, 0.1};
  auto f = gaussian();
  struct Scenario {
    std::string name;
    MeromorphicProfile profile;
    std::vector<SingularityType> predicted;
  };
  GL3Params generic{{cplx{0.2}, cplx{-0.1, 0.4}, cplx{-0.1, -0.4}}, {even, even, even}, even};
  GL3Params one{{cplx{0.3}, cplx{0.3}, cplx{-0.4}}, {even, even, even}, even};
  GL3Params chain{{cplx{0}, cplx{0}, cplx{0}}, {even, even, even}, even};
  std::vector<Scenario> scenarios{
      {"gl2 nu=1/3", gl2_profile(f, 1.0 / 3.0, even), predict_gl2_singularity_types(1.0 / 3.0)},
      {"gl2 nu=0", gl2_profile(f, 0.0, even), predict_gl2_singularity_types(0.0)},
      {"gl3 generic", gl3_profile(f, generic), predict_singularity_types(generic)},
      {"gl3 one-relation", gl3_profile(f, one), predict_singularity_types(one)},
      {"gl3 chain", gl3_profile(f, chain), predict_singularity_types(chain)},
  };
  bool ok = true;
  double stability = 0;
  std::string failed;
  for (const auto& sc : scenarios) {
    auto rep = verify_expansion(sc.profile, even, sc.predicted, 1.5, samples);
    stability = std::max(stability, rep.radius_stability);
    if (!rep.exact_match || rep.radius_stability >= 1e-6) {
      ok = false;
      failed += " " + sc.name;
    }
  }
  return {ok, fmt::format("5 scenarios, max radius drift {:.2e}{}", stability, failed.empty() ? "" : "; failed:" + failed)};
}

Outcome gl2_functional_equation() {
  auto d = delta_data(30);
  double worst = 0;
  for (double re : {0.3, 0.4, 0.5, 0.6, 0.7})
    for (double im : {-5.0, -2.5, 0.0, 2.5, 5.0}) worst = std::max(worst, gl2_functional_residual(cplx{re, im}, d, 30));
  std::vector<cplx> a;
  for (long long n = 1; n <= 30; ++n) a.push_back(d.coefficients[n]);
  a[1] += 0.1;
  AutomorphicData bad(CoefficientSeries(a, even, 0.5), d.nu, d.delta, d.kind);
  double corrupted = 0;
  for (double re : {0.3, 0.5, 0.7})
    for (double im : {-5.0, 0.0, 5.0}) corrupted = std::max(corrupted, gl2_functional_residual(cplx{re, im}, bad, 30));
  return {worst < 1e-6 && corrupted > 1e-3,
          fmt::format("discriminant max residual {:.2e} on 25 points; corrupted a_2 residual {:.2e}", worst, corrupted)};
}

Outcome printed_form_discrepancies() {
  double zeta_ratio = 0, zeta_fixed = 0;
  for (cplx s : {cplx{2.0, 0.0}, cplx{1.7, 3.0}, cplx{3.2, -6.0}}) {
    zeta_ratio = std::max(zeta_ratio, std::abs(zeta_printed_form_ratio(s) - 2.0));
    zeta_fixed = std::max(zeta_fixed, zeta_functional_residual(s));
  }
  double ratio_err = 0, printed_gap = 1e300, fixed = 0;
  for (int q : {5, 7})
    for (const auto& chi : characters_mod(q)) {
      if (!chi.primitive()) continue;
      for (cplx s : {cplx{2.3, 0.0}, cplx{0.3, 1.5}}) {
        auto [left, right] = dirichlet_printed_form(s, chi);
        auto cc = chi.conjugate();
        cplx predicted = std::exp(s * std::log(double(q))) * dirichlet_l(s, cc) / dirichlet_l(1.0 - s, cc);
        ratio_err = std::max(ratio_err, std::abs(right / left - predicted) / std::abs(predicted));
        printed_gap = std::min(printed_gap, std::abs(left - right));
        fixed = std::max(fixed, dirichlet_functional_residual(s, chi));
      }
    }
  bool ok = zeta_ratio < 1e-9 && zeta_fixed < 1e-9 && ratio_err < 1e-9 && printed_gap > 1e-3 && fixed < 1e-8;
  return {ok, fmt::format("zeta printed/corrected ratio off 2 by {:.2e}; L printed ratio matches prediction to {:.2e}, "
                          "min printed gap {:.2e}, corrected residual {:.2e}",
                          zeta_ratio, ratio_err, printed_gap, fixed)};
}

}  // namespace

int main() {
  criterion(1, "kernel functional equation", 1, kernel_functional_equation);
  criterion(2, "Gamma separation identity", 1, gamma_separation);
  criterion(3, "Riemann functional equation", 5, riemann_functional_equation);
  criterion(4, "Dirichlet functional equations", 10, dirichlet_functional_equations);
  criterion(5, "Mellin calculus", 30, mellin_calculus);
  criterion(6, "transform route agreement", 60, transform_routes);
  criterion(7, "singularity classification", 90, singularity_classification);
  criterion(8, "GL(2) functional equation", 30, gl2_functional_equation);
  criterion(9, "printed-form discrepancy guard", 10, printed_form_discrepancies);
  fmt::print("{} of 9 criteria passed\n", 9 - failures);
  return failures == 0 ? 0 : 1;
}
