#include <doctest.h>

#include <json.hpp>

#include "helpers.hpp"
#include "mellinlab/dirichlet.hpp"
#include "mellinlab/special_fn.hpp"
#include "oracle_values.hpp"

using namespace mellinlab;
using testing::pure_rel;
using testing::rel_err;

namespace {

DirichletCharacter find_character(const std::vector<DirichletCharacter>& chars, long long n, cplx value) {
  for (const auto& c : chars)
    if (std::abs(c(n) - value) < 1e-12) return c;
  throw std::runtime_error("character not found");
}

}  // namespace

TEST_SUITE("dirichlet") {
  TEST_CASE("character enumeration") {
    for (int q : {1, 3, 4, 5, 7, 8, 9, 12, 15, 16, 24}) {
      auto chars = characters_mod(q);
      CAPTURE(q);
      CHECK(static_cast<int>(chars.size()) == euler_phi(q));
      CHECK(chars.front().principal());
      // orthogonality: sum_a chi(a) = 0 for non-principal chi
      for (const auto& c : chars) {
        cplx s = 0;
        for (int a = 0; a < q; ++a) s += c(a);
        CHECK(std::abs(s - (c.principal() ? double(euler_phi(q)) : 0.0)) < 1e-10);
      }
    }
    // number of primitive characters mod 8 is 2, mod 12 is 1, mod 9 is 4
    auto count = [](int q) {
      int n = 0;
      for (const auto& c : characters_mod(q)) n += c.primitive();
      return n;
    };
    CHECK(count(8) == 2);
    CHECK(count(12) == 1);
    CHECK(count(9) == 4);
    CHECK(count(4) == 1);
  }

  TEST_CASE("character validation") {
    CHECK_THROWS_AS(DirichletCharacter(4, {0.0, 1.0, 0.0, 1.0, 0.0}), DomainError);
    CHECK_THROWS_AS(DirichletCharacter(3, {0.0, 1.0, 2.0}), DomainError);
  }

  TEST_CASE("gauss sums") {
    for (int q : {3, 4, 5, 7, 8})
      for (const auto& c : characters_mod(q))
        if (c.primitive()) CHECK(std::abs(std::abs(gauss_sum(c)) - std::sqrt(double(q))) < 1e-12);
    const auto chi5 = find_character(characters_mod(5), 2, I);
    CHECK(std::abs(gauss_sum(chi5) - oracle::gauss_sum_mod5) < 1e-13);
  }

  TEST_CASE("twisted comb identity") {
    for (const auto& c : characters_mod(7))
      if (c.primitive())
        for (long long n : {1, 3, 7, 10, -4}) CHECK(twisted_comb_identity_residual(c, n) < 1e-12);
    CHECK_THROWS_AS(twisted_comb_identity_residual(characters_mod(8).front(), 2), PrimitivityError);
  }

  TEST_CASE("hurwitz and riemann zeta against reference values") {
    for (const auto& p : oracle::hurwitz_points) {
      CAPTURE(p.s);
      CHECK(pure_rel(hurwitz_zeta(p.s, p.a), p.value) < 1e-11);
    }
    for (const auto& p : oracle::zeta_points) {
      CAPTURE(p.arg);
      CHECK(rel_err(riemann_zeta(p.arg), p.value) < 1e-10);
    }
    CHECK(std::abs(riemann_zeta(-1.0) + 1.0 / 12.0) < 1e-11);
    CHECK_THROWS_AS(riemann_zeta(1.0), PoleError);
  }

  TEST_CASE("L-values against reference values") {
    const auto chi4 = find_character(characters_mod(4), 3, -1.0);
    for (const auto& p : oracle::l_mod4_points) {
      CAPTURE(p.arg);
      CHECK(pure_rel(dirichlet_l(p.arg, chi4), p.value) < 1e-11);
    }
    const auto chi5 = find_character(characters_mod(5), 2, I);
    for (const auto& p : oracle::l_mod5_points) {
      CAPTURE(p.arg);
      CHECK(pure_rel(dirichlet_l(p.arg, chi5), p.value) < 1e-11);
    }
    // principal characters carry the pole of zeta
    CHECK_THROWS_AS(dirichlet_l(1.0, characters_mod(5).front()), PoleError);
  }

  TEST_CASE("zeta functional equation") {
    for (cplx s : {cplx{2.0, 0.0}, cplx{1.5, 9.0}, cplx{3.7, -4.0}, cplx{0.5, 14.134725}})
      CHECK(zeta_functional_residual(s) < 1e-9);
  }

  TEST_CASE("dirichlet functional equation") {
    for (int q : {3, 4, 5, 7, 8})
      for (const auto& c : characters_mod(q))
        if (c.primitive())
          for (cplx s : {cplx{2.0, 0.0}, cplx{0.3, 2.0}, cplx{-0.5, -3.0}}) CHECK(dirichlet_functional_residual(s, c) < 1e-8);
  }

  TEST_CASE("printed forms fail by the predicted factors") {
    for (cplx s : {cplx{2.0, 0.0}, cplx{1.7, 3.0}}) CHECK(std::abs(zeta_printed_form_ratio(s) - 2.0) < 1e-9);
    const auto chi5 = find_character(characters_mod(5), 2, I);
    for (cplx s : {cplx{2.3, 0.0}, cplx{0.3, 1.5}}) {
      auto [left, right] = dirichlet_printed_form(s, chi5);
      cplx predicted = std::exp(s * std::log(5.0)) * dirichlet_l(s, chi5.conjugate()) / dirichlet_l(1.0 - s, chi5.conjugate());
      CHECK(pure_rel(right / left, predicted) < 1e-9);
      CHECK(std::abs(left - right) > 1e-3);
    }
  }

  TEST_CASE("periodic coefficients reproduce L-values") {
    // G_delta(s) sum chi(n) |n|^{-s} (sg n)^delta = 2 G_delta(s) L(s, chi) for chi of parity delta
    const auto chi4 = find_character(characters_mod(4), 3, -1.0);
    auto series = CoefficientSeries::periodic(chi4.values(), odd, 4000000);
    cplx s{3.5, 1.0};
    auto v = mellin_periodic(series, odd, s, 100000, 1e-9);
    CHECK(pure_rel(v.value, 2.0 * g_delta(s, odd) * dirichlet_l(s, chi4)) < 1e-9);
    CHECK(v.tail_bound <= 1e-9);
    CHECK(mellin_periodic(series, even, s, 1000).value == cplx{0.0});
    CHECK_THROWS_AS(mellin_periodic(series, odd, cplx{1.5, 0.0}, 100), ConvergenceError);
  }

  TEST_CASE("character json") {
    auto j = nlohmann::json::parse(character_to_json(characters_mod(5)[1]));
    CHECK(j["q"] == 5);
    CHECK(j["values"].size() == 5);
    CHECK(j.contains("primitive"));
  }
}
