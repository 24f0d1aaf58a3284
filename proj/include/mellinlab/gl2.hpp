#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "mellinlab/dirichlet.hpp"
#include "mellinlab/types.hpp"

namespace mellinlab {

enum class AutomorphicKind { holomorphic, maass_toy };

std::string to_string(AutomorphicKind kind);

/// Normalized coefficients a_n (a_1 = 1) with the archimedean parameters (nu, delta).
struct AutomorphicData {
  CoefficientSeries coefficients;
  cplx nu;
  Parity delta;
  AutomorphicKind kind;

  AutomorphicData(CoefficientSeries a, cplx nu_, Parity delta_, AutomorphicKind kind_);
};

/// Largest N accepted by ramanujan_tau.
inline constexpr int ramanujan_tau_max = 10000;

/// tau(1), ..., tau(N) from q prod (1 - q^n)^24.
std::vector<std::int64_t> ramanujan_tau(int n);

/// Discriminant data: a_n = tau(n) n^{-11/2}, nu = -11/2, delta = 0.
AutomorphicData delta_data(int n_coefficients = 30);

struct CompletedValue {
  cplx value;
  double tail_bound;
};

/// Lambda(s) = (2 pi)^{-(s-nu)} Gamma(s-nu) L(s), continued by two incomplete-Gamma
/// sums split at `split` and 1/split. Requires nu in 1/2 + Z.
CompletedValue completed_l(cplx s, const AutomorphicData& data, int n_terms = 30, double split = 1.0,
                           double tolerance = 1e-9);

/// L(s) = sum a_n n^{-s}, recovered from completed_l.
cplx l_value(cplx s, const AutomorphicData& data, int n_terms = 30, double split = 1.25);

/// |G_delta(s-nu) L(s) - (-1)^delta G_delta(1-s-nu) L(1-s)|.
/// The split is kept away from 1, where the continuation is symmetric by construction.
double gl2_functional_residual(cplx s, const AutomorphicData& data, int n_terms = 30, double split = 1.25);

struct DiagnosticGrid {
  std::vector<double> re_values{0.3, 0.4, 0.5, 0.6, 0.7};
  std::vector<double> im_values{-5.0, -2.5, 0.0, 2.5, 5.0};
  double growth_sigma = 0.5;
  double growth_t_min = 1.0;
  double growth_t_max = 8.0;
};

struct LineSummary {
  double re;
  double max_l;         ///< max |L(s)| on the line
  double max_kernel_l;  ///< max |G_delta(s-nu) L(s)| on the line
  double max_residual;
};

struct ConverseReport {
  std::vector<LineSummary> lines;
  double growth_exponent = 0;
  double max_residual = 0;
  bool finite = true;
  bool passed = false;
  std::string failure;  ///< empty when passed
};

/// Entirety / moderate-growth surrogates plus the functional-equation residual field.
ConverseReport converse_diagnostic(const AutomorphicData& data, const DiagnosticGrid& grid = {},
                                   double tolerance = 1e-5, int n_terms = 30);

/// Reads `# nu=<re>,<im> delta=<0|1> kind=<holomorphic|maass_toy>` followed by `n value` lines.
AutomorphicData read_coefficients(std::istream& in);
AutomorphicData load_coefficients(const std::string& path);
void write_coefficients(std::ostream& out, const AutomorphicData& data);

}  // namespace mellinlab
