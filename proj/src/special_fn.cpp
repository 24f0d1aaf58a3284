#include "mellinlab/special_fn.hpp"

#include <algorithm>
#include <array>
#include <limits>

namespace mellinlab {
namespace {

constexpr double log_2pi = 1.83787706640934548356065947281123527;
constexpr double log_pi = 1.14472988584940017414342735135305871;
constexpr double sqrt_pi = 1.77245385090551602729816748334114518;

// Lanczos g = 7, n = 9.
constexpr double lanczos_g = 7.0;
constexpr std::array<double, 9> lanczos_coef{
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

// B_{2k} / (2k (2k-1)), k = 1..10
constexpr std::array<double, 10> stirling_coef{
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
    43867.0 / 244188.0,
    -174611.0 / 125400.0};

cplx log_gamma_stirling(cplx z) {
  cplx inv = 1.0 / z;
  cplx inv2 = inv * inv;
  cplx series = 0.0;
  cplx p = inv;
  for (double c : stirling_coef) {
    series += c * p;
    p *= inv2;
  }
  return (z - 0.5) * std::log(z) - z + 0.5 * log_2pi + series;
}

cplx log_gamma_lanczos(cplx s) {
  cplx z = s - 1.0;
  cplx x = lanczos_coef[0];
  for (std::size_t i = 1; i < lanczos_coef.size(); ++i) x += lanczos_coef[i] / (z + static_cast<double>(i));
  cplx t = z + lanczos_g + 0.5;
  return 0.5 * log_2pi + (z + 0.5) * std::log(t) - t + std::log(x);
}

double nearest_integer(double x) { return std::nearbyint(x); }

}  // namespace

double distance_to_gamma_lattice(cplx s, Parity parity) {
  double m_real = (-s.real() - static_cast<double>(parity.value())) / 2.0;
  double best = std::numeric_limits<double>::infinity();
  for (double m : {std::floor(m_real), std::ceil(m_real)}) {
    m = std::max(m, 0.0);
    double n = -static_cast<double>(parity.value()) - 2.0 * m;
    best = std::min(best, std::abs(s - n));
  }
  return best;
}

double distance_to_gamma_poles(cplx s) {
  return std::min(distance_to_gamma_lattice(s, even), distance_to_gamma_lattice(s, odd));
}

cplx log_sin_pi(cplx z) {
  double n = nearest_integer(z.real());
  cplx w = z - n;
  cplx shift = (static_cast<long long>(n) % 2 == 0) ? cplx{0.0, 0.0} : cplx{0.0, pi};
  if (std::abs(w.imag()) < 5.0) return std::log(std::sin(pi * w)) + shift;
  // sin(pi w) = e^{-i pi w} (e^{2 i pi w} - 1) / (2i) for Im w > 0, mirrored below.
  if (w.imag() > 0)
    return -I * pi * w + std::log((std::exp(2.0 * I * pi * w) - 1.0) / (2.0 * I)) + shift;
  return I * pi * w + std::log((1.0 - std::exp(-2.0 * I * pi * w)) / (2.0 * I)) + shift;
}

cplx log_gamma(cplx s) {
  if (!std::isfinite(s.real()) || !std::isfinite(s.imag())) throw DomainError("log_gamma: non-finite argument");
  if (distance_to_gamma_poles(s) < pole_tolerance) throw PoleError("log_gamma: argument at a pole of Gamma");
  if (s.real() < 0.5) return log_pi - log_sin_pi(s) - log_gamma(1.0 - s);
  if (std::abs(s) >= stirling_radius) return log_gamma_stirling(s);
  return log_gamma_lanczos(s);
}

cplx gamma(cplx s) {
  cplx lg = log_gamma(s);
  if (lg.real() > 709.0) throw OverflowError("gamma: result exceeds the exponent range");
  return std::exp(lg);
}

cplx reciprocal_gamma(cplx s) {
  if (s.real() >= 0.5) return std::exp(-log_gamma(s));
  if (s.imag() == 0.0 && s.real() == nearest_integer(s.real())) return 0.0;
  cplx lr = log_sin_pi(s) - log_pi + log_gamma(1.0 - s);
  if (lr.real() > 709.0) throw OverflowError("reciprocal_gamma: result exceeds the exponent range");
  return std::exp(lr);
}

cplx g_delta(cplx s, Parity delta) {
  if (distance_to_gamma_lattice(s, delta) < pole_tolerance) throw PoleError("g_delta: argument on the pole lattice");
  // Near the removable points the direct product is 0 * inf; use G(s) G(1-s) = (-1)^delta.
  if (s.real() < 0.5 && distance_to_gamma_lattice(s, delta + 1) < 0.1) return delta.sign() / g_delta(1.0 - s, delta);
  cplx lg = std::log(2.0) - s * log_2pi + log_gamma(s) + log_sin_pi((s - static_cast<double>(delta.value()) + 1.0) / 2.0);
  if (lg.real() > 709.0) throw OverflowError("g_delta: result exceeds the exponent range");
  cplx v = std::exp(lg);
  if (delta.odd()) v *= I;
  return v;
}

cplx upper_incomplete_gamma(cplx s, double x) {
  if (!(x > 0.0)) throw DomainError("upper_incomplete_gamma: x must be positive");
  constexpr double eps = 1e-16;
  constexpr double tiny = 1e-300;
  cplx prefactor_log = -x + s * std::log(x);
  bool use_cf = x > s.real() + 1.0 || distance_to_gamma_poles(s) < 0.1;
  if (use_cf) {
    // Modified Lentz evaluation of the Legendre continued fraction.
    cplx b = x + 1.0 - s;
    cplx c = 1.0 / tiny;
    cplx d = 1.0 / b;
    cplx h = d;
    for (int i = 1; i < 200000; ++i) {
      cplx an = -static_cast<double>(i) * (static_cast<double>(i) - s);
      b += 2.0;
      d = an * d + b;
      if (std::abs(d) < tiny) d = tiny;
      c = b + an / c;
      if (std::abs(c) < tiny) c = tiny;
      d = 1.0 / d;
      cplx del = d * c;
      h *= del;
      if (std::abs(del - 1.0) < eps) return checked(std::exp(prefactor_log) * h, "upper_incomplete_gamma");
    }
    throw ConvergenceError("upper_incomplete_gamma: continued fraction did not converge");
  }
  cplx ap = s;
  cplx del = 1.0 / s;
  cplx sum = del;
  for (int n = 0; n < 100000; ++n) {
    ap += 1.0;
    del *= x / ap;
    sum += del;
    if (std::abs(del) < std::abs(sum) * eps) {
      cplx lower = sum * std::exp(prefactor_log);
      return checked(gamma(s) - lower, "upper_incomplete_gamma");
    }
  }
  throw ConvergenceError("upper_incomplete_gamma: series did not converge");
}

cplx erf_complex(cplx z) {
  if (std::abs(z.imag()) > erf_imag_guard) throw OverflowError("erf_complex: |Im z| exceeds the overflow guard");
  if (std::abs(z) <= 3.0 || std::abs(z.real()) < 1.5) {
    cplx z2 = z * z;
    cplx term = z;
    cplx sum = z;
    double n2 = std::norm(z);
    for (int n = 1; n < 20000; ++n) {
      term *= -z2 / static_cast<double>(n);
      cplx contrib = term / static_cast<double>(2 * n + 1);
      sum += contrib;
      if (n > n2 && std::abs(contrib) < 1e-17 * std::abs(sum)) break;
    }
    return checked(2.0 / sqrt_pi * sum, "erf_complex");
  }
  if (z.real() < 0) return -erf_complex(-z);
  // erfc z = exp(-z^2)/sqrt(pi) * 1/(z + (1/2)/(z + 1/(z + (3/2)/(z + ...))))
  constexpr double tiny = 1e-300;
  cplx f = z;
  cplx c = z;
  cplx d = 0.0;
  for (int k = 1; k < 100000; ++k) {
    double a = 0.5 * k;
    d = z + a * d;
    if (std::abs(d) < tiny) d = tiny;
    c = z + a / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    cplx del = c * d;
    f *= del;
    if (std::abs(del - 1.0) < 1e-16) {
      cplx erfc = std::exp(-z * z) / sqrt_pi / f;
      return checked(1.0 - erfc, "erf_complex");
    }
  }
  throw ConvergenceError("erf_complex: continued fraction did not converge");
}

cplx e_partition(cplx s) { return 0.5 * (1.0 + erf_complex(-I * s)); }

cplx c_beta(cplx beta) {
  double n = nearest_integer(beta.real());
  cplx w = beta - n;
  if (std::abs(w) < pole_tolerance) throw PoleError("c_beta: beta is an integer");
  if (std::abs(w.imag()) < 5.0) return pi * std::exp(-I * pi * w) / std::sin(pi * w);
  return 2.0 * pi * I / (std::exp(2.0 * pi * I * w) - 1.0);
}

cplx h_factor(cplx s) { return checked(std::exp(I * pi * s) * reciprocal_gamma(1.0 - s), "h_factor"); }

}  // namespace mellinlab
