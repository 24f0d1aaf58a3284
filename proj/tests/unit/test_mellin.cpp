#include <doctest.h>

#include "helpers.hpp"
#include "mellinlab/mellin.hpp"
#include "mellinlab/special_fn.hpp"
#include "oracle_values.hpp"

using namespace mellinlab;
using testing::pure_rel;

TEST_SUITE("mellin") {
  TEST_CASE("transforms of the Gaussian family match reference values") {
    auto f = gaussian();
    for (const auto& p : oracle::mellin_gaussian_even) {
      CAPTURE(p.arg);
      CHECK(testing::rel_err(signed_mellin(f, even, p.arg), p.value) < 1e-10);
    }
    auto g = x_gaussian();
    for (const auto& p : oracle::mellin_x_gaussian_odd) {
      CAPTURE(p.arg);
      CHECK(pure_rel(signed_mellin(g, odd, p.arg), p.value) < 1e-10);
    }
    // opposite parity vanishes identically
    CHECK(std::abs(signed_mellin(f, odd, cplx{0.7, 1.0})) == 0.0);
  }

  TEST_CASE("derivative identity") {
    // M_{delta+1} f'(s) = -(s - 1) M_delta f(s - 1)
    auto f = gaussian_polynomial({0.3, 1.0, -0.5}, 1.0);
    auto df = f.derived(1);
    for (cplx s : {cplx{2.3, 1.0}, cplx{1.7, -4.0}, cplx{0.6, 0.5}, cplx{-0.4, 2.0}})
      for (Parity d : {even, odd}) {
        cplx lhs = signed_mellin(df, d + 1, s);
        cplx rhs = -(s - 1.0) * signed_mellin(f, d, s - 1.0);
        CHECK(std::abs(lhs - rhs) < 1e-9 * std::max(1.0, std::abs(lhs)));
      }
  }

  TEST_CASE("residues") {
    auto f = gaussian();
    CHECK(std::abs(mellin_residue(f, even, 0) - 2.0) < 1e-15);
    CHECK(std::abs(mellin_residue(f, even, 2) + 2.0 * pi) < 1e-12);
    CHECK(std::abs(mellin_residue(f, even, 4) - pi * pi) < 1e-12);
    CHECK_THROWS_AS(mellin_residue(f, even, 1), ParityError);
    auto profile = mellin_profile(f, even);
    for (int n : {0, 2, 4}) {
      cplx numeric = laurent_coefficients(profile, -double(n), 1).front();
      CHECK(std::abs(numeric - mellin_residue(f, even, n)) < 1e-9);
    }
    CHECK_THROWS_AS(signed_mellin(f, even, cplx{-2.0, 0.0}), PoleError);
    // x exp(-pi x^2) has no pole at 0 in the odd transform: f(0) does not enter
    CHECK(std::isfinite(std::abs(signed_mellin(x_gaussian(), odd, cplx{-2.0, 0.0}))));
  }

  TEST_CASE("depth limit") {
    auto c = cutoff_function(2.0);
    CHECK_THROWS_AS(signed_mellin(c, even, cplx{-3.5, 0.0}), DepthError);
  }

  TEST_CASE("cutoff residue") {
    CHECK(cutoff_mellin_residue(even) == cplx{2.0});
    CHECK(cutoff_mellin_residue(odd) == cplx{0.0});
    auto c = cutoff_function(2.0);
    // residue at 0 of M_0 c: 2 c(0) = 2
    auto profile = mellin_profile(c, even);
    // the steep transition of the cutoff limits the default quadrature to about 1e-6
    CHECK(std::abs(laurent_coefficients(profile, 0.0, 1).front() - 2.0) < 2e-6);
  }

  TEST_CASE("inversion round trip") {
    for (auto [f, d] : {std::pair{gaussian(), even}, std::pair{x_gaussian(), odd}}) {
      auto profile = mellin_profile(f, d);
      VerticalContour c;
      c.abscissa = profile.default_abscissa();
      for (double x : {0.1, 0.35, 0.8, 1.3, -0.6, -2.0})
        CHECK(std::abs(mellin_invert(profile, d, x, c) - f(x)) < 1e-7);
    }
  }

  TEST_CASE("inversion returns the parity part") {
    auto f = gaussian_polynomial({1.0, 0.5}, 1.0);  // (1 + x/2) exp(-pi x^2)
    double x = 0.45;
    cplx total = 0;
    for (Parity d : {even, odd}) {
      auto profile = mellin_profile(f, d);
      VerticalContour c;
      c.abscissa = profile.default_abscissa();
      total += mellin_invert(profile, d, x, c);
    }
    CHECK(std::abs(total - f(x)) < 1e-7);
  }

  TEST_CASE("contour errors") {
    auto profile = mellin_profile(gaussian(), even);
    VerticalContour c;
    c.abscissa = 0.0;
    c.pole_clearance = 0.6;
    CHECK_THROWS_AS(mellin_invert(profile, even, 0.5, c), ContourError);
    CHECK_THROWS_AS(mellin_invert(profile, even, 0.0, VerticalContour{}), DomainError);
  }

  TEST_CASE("expansion of a single Gamma factor") {
    // Phi_0 of Gamma(s) is exp(-|x|) / 2: coefficients 1/2, -1/2, 1/4
    MeromorphicProfile h([](cplx s) { return gamma(s); }, {{0.0, 1}, {-1.0, 1}});
    auto terms = asymptotic_expansion(h, even, 2.5);
    REQUIRE(terms.size() == 3);
    CHECK(std::abs(terms[0].coefficient - 0.5) < 1e-10);
    CHECK(std::abs(terms[1].coefficient + 0.5) < 1e-10);
    CHECK(std::abs(terms[2].coefficient - 0.25) < 1e-10);
    CHECK(std::abs(mellin_invert(h, even, 0.3, VerticalContour{}) - 0.5 * std::exp(-0.3)) < 1e-10);
  }

  TEST_CASE("double pole produces a log term") {
    MeromorphicProfile h([](cplx s) { return gamma(s) * gamma(s); }, {{0.0, 2}, {-1.0, 2}});
    auto terms = asymptotic_expansion(h, even, 0.5);
    int logs = 0;
    for (const auto& t : terms) logs = std::max(logs, t.type.log_index);
    CHECK(logs == 1);
  }

  TEST_CASE("fourier-mellin relation") {
    for (auto [f, d] : {std::pair{gaussian(), even}, std::pair{x_gaussian(), odd}})
      for (cplx s : {cplx{0.3, 1.0}, cplx{0.6, -2.5}})
        CHECK(fourier_mellin_relation_residual(f, d, s) < 1e-8);
  }

  TEST_CASE("growth measurement") {
    // |G_0(1/2 + it)| = 1, so the fitted exponent of t^2 G_0 is 2
    double e = measure_growth_exponent([](cplx s) { return s.imag() * s.imag() * g_delta(s, even); }, 0.5, 2.0, 40.0);
    CHECK(e == doctest::Approx(2.0).epsilon(1e-6));
  }

  TEST_CASE("strip bookkeeping") {
    MellinStrip strip(1, 2);
    CHECK(strip.contains(cplx{0.0, 5.0}));
    CHECK_FALSE(strip.contains(cplx{-1.5, 0.0}));
  }
}
