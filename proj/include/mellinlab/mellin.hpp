#pragma once

#include <functional>
#include <limits>
#include <optional>
#include <vector>

#include "mellinlab/quadrature.hpp"
#include "mellinlab/test_function.hpp"
#include "mellinlab/types.hpp"

namespace mellinlab {

/// Vanishing orders at 0 and infinity; transforms exist on -k0 < Re s < k_inf.
struct MellinStrip {
  static constexpr int unbounded = std::numeric_limits<int>::max();
  int k0 = unbounded;
  int k_inf = unbounded;

  MellinStrip() = default;
  MellinStrip(int k0_, int k_inf_);
  bool contains(cplx s) const noexcept;
};

/// Poles at base - 2k, k >= 0, each of order at most `order`.
struct PoleLattice {
  cplx base;
  int order = 1;
};

enum class GrowthClass { rapid_decay, polynomial_growth };

/// Meromorphic function on vertical lines with declared pole lattices.
class MeromorphicProfile {
 public:
  using Evaluator = std::function<cplx(cplx)>;

  MeromorphicProfile(Evaluator f, std::vector<PoleLattice> lattices, GrowthClass growth = GrowthClass::rapid_decay,
                     double right_limit = std::numeric_limits<double>::infinity());

  cplx operator()(cplx s) const { return f_(s); }
  const std::vector<PoleLattice>& lattices() const noexcept { return lattices_; }
  GrowthClass growth() const noexcept { return growth_; }
  /// Real part of the nearest singularity on the right of the lattices (if any).
  double right_limit() const noexcept { return right_limit_; }

  /// Canonical abscissa: right of every lattice by 0.5, kept left of right_limit.
  double default_abscissa(double clearance = 0.25) const;
  /// Distinct pole candidates with Re s > re_min, coincident points merged.
  std::vector<PoleLattice> poles_right_of(double re_min) const;

 private:
  Evaluator f_;
  std::vector<PoleLattice> lattices_;
  GrowthClass growth_;
  double right_limit_;
};

struct VerticalContour {
  double abscissa = 1.0;
  double half_height = 40.0;
  int nodes_per_panel = 16;  ///< Gauss-Legendre nodes per unit panel in Im s
  double pole_clearance = 0.25;
  double tail_tolerance = 1e-16;  ///< relative integrand size required at the truncation height
};

struct ExpansionTerm {
  SingularityType type;
  cplx coefficient;
};

/// M_delta f(s). Direct quadrature for Re s > 0, integration-by-parts ladder otherwise.
cplx signed_mellin(const TestFunction& f, Parity delta, cplx s, const QuadratureConfig& quad = {});

/// Residue of M_delta f at s = -n: 2 f^{(n)}(0) / n!.
cplx mellin_residue(const TestFunction& f, Parity delta, int n);

/// The profile s -> M_delta f(s) with its pole lattice at 0 (or -1).
MeromorphicProfile mellin_profile(const TestFunction& f, Parity delta, const QuadratureConfig& quad = {});

/// Abscissa actually used for H: the requested one, or nudged by +-0.5 off a lattice.
double resolve_abscissa(const MeromorphicProfile& h, const VerticalContour& contour);

/// (sg x)^delta / (4 pi i) int_{Re s = s0} H(s) |x|^{-s} ds.
cplx mellin_invert(const MeromorphicProfile& h, Parity delta, double x, const VerticalContour& contour);

/// Laurent coefficients a_{-1}, ..., a_{-order} of H at s0 by circle quadrature.
std::vector<cplx> laurent_coefficients(const MeromorphicProfile& h, cplx s0, int order, double radius = 0.1,
                                       int nodes = 64);

/// Detected order of the pole of H at s0 (0 if regular), capped at declared + 1.
int detect_pole_order(const std::vector<cplx>& laurent, double radius, double scale);

/// Singular terms of Phi_delta(H) near 0 from all poles with Re s > -depth.
std::vector<ExpansionTerm> asymptotic_expansion(const MeromorphicProfile& h, Parity delta, double depth,
                                                double radius = 0.1, int nodes = 64);

/// Sum of the expansion terms at x != 0.
cplx evaluate_expansion(const std::vector<ExpansionTerm>& terms, double x);

/// (1 / 4 pi i) int M_delta f(s) sigma(1 - s) ds.
cplx mellin_parseval(const TestFunction& f, const MeromorphicProfile& sigma_mellin, Parity delta,
                     const VerticalContour& contour, const QuadratureConfig& quad = {});

/// Residue at s = 0 of the Mellin transform of the smooth cutoff.
cplx cutoff_mellin_residue(Parity delta);

/// |M_delta F(f)(s) - (-1)^delta G_delta(s) M_delta f(1 - s)|, F(f) by quadrature.
double fourier_mellin_relation_residual(const TestFunction& f, Parity delta, cplx s, const QuadratureConfig& quad = {});

/// Least-squares slope of log|H(sigma + i t)| against log t on [t_min, t_max].
double measure_growth_exponent(const std::function<cplx(cplx)>& h, double sigma, double t_min, double t_max,
                               int samples = 24);

}  // namespace mellinlab
