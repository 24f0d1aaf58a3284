#pragma once

#include <functional>
#include <span>
#include <vector>

#include "mellinlab/types.hpp"

namespace mellinlab {

/// Gauss-Legendre rule on [-1, 1].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Rule with n nodes; results are cached per n.
const GaussRule& gauss_legendre(int n);

/// Neumaier compensated accumulator for complex values.
class CompensatedSum {
 public:
  void add(cplx v) noexcept {
    add_real(v.real(), re_, re_c_);
    add_real(v.imag(), im_, im_c_);
  }
  cplx value() const noexcept { return {re_ + re_c_, im_ + im_c_}; }

 private:
  static void add_real(double v, double& s, double& c) noexcept {
    double t = s + v;
    if (std::abs(s) >= std::abs(v))
      c += (s - t) + v;
    else
      c += (v - t) + s;
    s = t;
  }
  double re_ = 0, re_c_ = 0, im_ = 0, im_c_ = 0;
};

using RealIntegrand = std::function<cplx(double)>;

/// Composite Gauss-Legendre on [a, b] with panels no wider than max_panel.
cplx integrate_panels(const RealIntegrand& f, double a, double b, double max_panel, int nodes_per_panel = 20);

/// Limit of a slowly converging sequence of partial sums (Wynn epsilon).
/// `error` receives the difference of the last two diagonal estimates.
cplx wynn_epsilon(std::span<const cplx> partial_sums, double* error = nullptr);

/// Controls direct real-line quadratures (Mellin integrals, Fourier transforms).
struct QuadratureConfig {
  double panel_width = 0.5;     ///< in log|x| for Mellin integrals
  int nodes_per_panel = 20;
  double decay_cutoff = 1e-18;  ///< x^{Re s} threshold fixing the lower log|x| limit
};

}  // namespace mellinlab
