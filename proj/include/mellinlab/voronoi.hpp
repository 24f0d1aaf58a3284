#pragma once

#include <array>
#include <optional>
#include <vector>

#include "mellinlab/mellin.hpp"
#include "mellinlab/test_function.hpp"

namespace mellinlab {

struct KernelParams {
  cplx alpha;
  Parity eta;
};

struct GL3Params {
  std::array<cplx, 3> lambdas;
  std::array<Parity, 3> deltas;
  Parity eta;  ///< parity of the input
};

/// Largest |y| accepted by the direct route.
inline constexpr double direct_route_max_y = 50.0;

/// int f(1/x) (sg x)^eta |x|^{-alpha-1} e(-x y) dx by direct quadrature (Re alpha > 0).
cplx t_alpha_direct(const TestFunction& f, KernelParams p, double y, const QuadratureConfig& quad = {});

/// (-1)^delta G_delta(s) M_{delta+eta} f(s + alpha) with its pole lattices.
MeromorphicProfile t_alpha_profile(const TestFunction& f, KernelParams p, Parity delta_out,
                                   const QuadratureConfig& quad = {});

/// Parity-delta_out part of T_{alpha,eta} f at y, by Mellin inversion.
cplx t_alpha_mellin(const TestFunction& f, KernelParams p, Parity delta_out, double y,
                    std::optional<VerticalContour> contour = std::nullopt);

/// Both parity parts summed: the full T_{alpha,eta} f(y).
cplx t_alpha_mellin_total(const TestFunction& f, KernelParams p, double y,
                          std::optional<VerticalContour> contour = std::nullopt);

/// M_delta F for F = |x|^{1-nu} T_{2nu,0} F(|x|^nu f): G_delta(s+1-nu) G_delta(s+1+nu) M_delta f(-s).
MeromorphicProfile gl2_profile(const TestFunction& f, cplx nu, Parity delta, const QuadratureConfig& quad = {});

cplx gl2_transform(const TestFunction& f, cplx nu, double y, std::optional<VerticalContour> contour = std::nullopt);

/// M_eta F = (-1)^eta prod_j G_{delta_j+eta}(s - lambda_j + 1) M_eta f(-s).
MeromorphicProfile gl3_profile(const TestFunction& f, const GL3Params& p, const QuadratureConfig& quad = {});

cplx gl3_transform(const TestFunction& f, const GL3Params& p, double y,
                   std::optional<VerticalContour> contour = std::nullopt);

/// (alpha1, eta1) precedes (alpha2, eta2) iff alpha2 - alpha1 lies in (2Z + eta1 + eta2) and is >= 0.
/// Differences within `snap` of such an integer count as exact.
bool precedes(cplx alpha1, Parity eta1, cplx alpha2, Parity eta2, double snap = 1e-8);

/// Singularity types (1 - lambda_j, delta_j, log index) from the chains of the order relation.
std::vector<SingularityType> predict_singularity_types(const GL3Params& p);

/// GL(2) analogue: the pairs (nu, 0) and (-nu, 0).
std::vector<SingularityType> predict_gl2_singularity_types(cplx nu);

/// |Gamma(s)Gamma(s+beta) - c(beta)h(s+beta)Gamma(s) - c(-beta)h(s)Gamma(s+beta)|
double separation_identity_residual(cplx s, cplx beta);

struct ExtractedExponent {
  cplx exponent;
  int max_log_index = 0;
};

struct ExpansionReport {
  std::vector<SingularityType> predicted;
  std::vector<ExpansionTerm> terms;          ///< extracted at the primary radius
  std::vector<ExtractedExponent> expected;   ///< predicted leading exponents with their max log index
  std::vector<ExtractedExponent> leading;    ///< extracted data at the same exponents, same order
  std::vector<ExtractedExponent> extracted;  ///< every extracted exponent with its max log index
  bool exact_match = false;  ///< extracted sets equal the prediction
  bool consistent = false;   ///< extracted sets contained in the prediction
  double radius_stability = 0;  ///< max coefficient change between the two circle radii
  double remainder_exponent = 0;  ///< fitted exponent of F minus the expansion near 0
  bool remainder_ok = false;
};

/// Extracts the expansion of Phi_delta(H), compares with `predicted`, and fits the
/// remainder at the sample points.
ExpansionReport verify_expansion(const MeromorphicProfile& h, Parity delta,
                                 const std::vector<SingularityType>& predicted, double depth,
                                 const std::vector<double>& x_samples, double radius = 0.1,
                                 double second_radius = 0.05);

}  // namespace mellinlab
