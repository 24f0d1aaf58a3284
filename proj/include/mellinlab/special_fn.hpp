#pragma once

#include "mellinlab/types.hpp"

namespace mellinlab {

/// Arguments closer than this to a pole raise PoleError.
inline constexpr double pole_tolerance = 1e-9;

/// Switch radius between the Lanczos and Stirling evaluations of log Gamma.
inline constexpr double stirling_radius = 10.0;

/// Largest |Im z| accepted by erf_complex.
inline constexpr double erf_imag_guard = 26.0;

/// log Gamma(s). Principal branch for Re s >= 1/2; continued by reflection
/// elsewhere, so only exp(log_gamma(s)) is guaranteed to equal Gamma(s).
cplx log_gamma(cplx s);

cplx gamma(cplx s);

/// 1/Gamma(s), entire; exactly 0 at the non-positive integers.
cplx reciprocal_gamma(cplx s);

/// log sin(pi z), stable for large |Im z|. Branch is unspecified.
cplx log_sin_pi(cplx z);

/// 2 i^delta (2 pi)^{-s} Gamma(s) cos(pi (s - delta) / 2): the signed Mellin
/// transform of e(x). Poles at (2Z + delta) intersected with Z<=0.
cplx g_delta(cplx s, Parity delta);

/// Gamma(s, x) for real x > 0.
cplx upper_incomplete_gamma(cplx s, double x);

/// (2/sqrt(pi)) int_0^z exp(-t^2) dt.
cplx erf_complex(cplx z);

/// E(s) = (1 + erf(-i s)) / 2.
cplx e_partition(cplx s);

/// c(beta) = pi exp(-i pi beta) / sin(pi beta).
cplx c_beta(cplx beta);

/// h(s) = exp(i pi s) / Gamma(1 - s).
cplx h_factor(cplx s);

/// Distance from s to the nearest integer n <= 0 with n = parity (mod 2).
double distance_to_gamma_lattice(cplx s, Parity parity);

/// Distance from s to the nearest integer n <= 0.
double distance_to_gamma_poles(cplx s);

}  // namespace mellinlab
