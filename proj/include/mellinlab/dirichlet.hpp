#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "mellinlab/types.hpp"

namespace mellinlab {

/// Dirichlet character stored as its full value table mod q.
class DirichletCharacter {
 public:
  DirichletCharacter(int modulus, std::vector<cplx> values, int index = 0);

  int modulus() const noexcept { return q_; }
  int index() const noexcept { return index_; }
  Parity parity() const noexcept { return parity_; }
  bool primitive() const noexcept { return primitive_; }
  bool principal() const noexcept { return principal_; }
  /// chi(n) for any integer n.
  cplx operator()(long long n) const;
  const std::vector<cplx>& values() const noexcept { return values_; }
  DirichletCharacter conjugate() const;

 private:
  int q_;
  std::vector<cplx> values_;
  int index_;
  Parity parity_;
  bool primitive_ = false;
  bool principal_ = false;
};

/// Coefficients a_n for n >= 1 with a_{-n} = (-1)^delta a_n.
class CoefficientSeries {
 public:
  using Generator = std::function<cplx(long long)>;

  /// Stored coefficients a_1, ..., a_N; the growth constant is measured.
  CoefficientSeries(std::vector<cplx> a, Parity delta, double growth_exponent);
  /// Generated coefficients for 1 <= n <= max_n with a declared growth constant.
  CoefficientSeries(Generator a, long long max_n, Parity delta, double growth_exponent, double growth_constant);

  /// Periodic coefficients a_n = values[n mod q] (bounded, growth exponent 0).
  static CoefficientSeries periodic(std::vector<cplx> values, Parity delta, long long max_n);

  /// a_n for n >= 1 (0 beyond the available range).
  cplx operator[](long long n) const;
  /// a_n for any nonzero integer via the parity rule.
  cplx signed_at(long long n) const;
  long long size() const noexcept { return max_n_; }
  Parity delta() const noexcept { return delta_; }
  double growth_exponent() const noexcept { return growth_; }
  /// C with |a_n| <= C n^growth_exponent over the available range.
  double growth_constant() const noexcept { return c_; }

 private:
  Generator a_;
  long long max_n_;
  Parity delta_;
  double growth_;
  double c_ = 0;
};

int euler_phi(int q);

/// All phi(q) characters mod q; index 0 is principal.
std::vector<DirichletCharacter> characters_mod(int q);

/// g_chi = sum_a chi(a) e(a/q)
cplx gauss_sum(const DirichletCharacter& chi);

/// |sum_a chi(a) e(n a / q) - g_chi conj(chi(n))|
double twisted_comb_identity_residual(const DirichletCharacter& chi, long long n);

/// Hurwitz zeta by Euler-Maclaurin (shift up to 50, Bernoulli terms through B_20).
cplx hurwitz_zeta(cplx s, double a);

cplx riemann_zeta(cplx s);

cplx dirichlet_l(cplx s, const DirichletCharacter& chi);

/// |zeta(1 - s) - G_0(s) zeta(s)|
double zeta_functional_residual(cplx s);

/// Right-hand side of the literally printed form 2 zeta(1 - s) = G_0(s) zeta(s),
/// reported as the ratio 2 zeta(1 - s) / (G_0(s) zeta(s)).
cplx zeta_printed_form_ratio(cplx s);

/// Right-hand side (-1)^delta g_chi G_delta(s) q^{s-1} L(s, conj chi).
cplx dirichlet_functional_rhs(cplx s, const DirichletCharacter& chi);

/// |L(1 - s, chi) - dirichlet_functional_rhs(s, chi)|
double dirichlet_functional_residual(cplx s, const DirichletCharacter& chi);

/// The literally printed form L(s, chi) = (-1)^delta G_delta(1 - s) g_chi L(s, conj chi):
/// returns the pair {left, right}.
std::pair<cplx, cplx> dirichlet_printed_form(cplx s, const DirichletCharacter& chi);

struct PeriodicMellinValue {
  cplx value;
  double tail_bound;
};

/// G_delta(s) sum_{0 < |n| <= N} (sg n)^delta a_n |n|^{-s}, with a certified tail bound.
PeriodicMellinValue mellin_periodic(const CoefficientSeries& series, Parity delta, cplx s, long long n_trunc,
                                    double tolerance = 1e-9);

/// JSON object with fields q, index, values ([re, im] pairs), delta, primitive.
std::string character_to_json(const DirichletCharacter& chi);

}  // namespace mellinlab
