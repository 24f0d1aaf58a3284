#include "mellinlab/mellin.hpp"

#include <algorithm>
#include <cmath>

#include "mellinlab/special_fn.hpp"

namespace mellinlab {

MellinStrip::MellinStrip(int k0_, int k_inf_) : k0(k0_), k_inf(k_inf_) {
  if (k0 < 0 || k_inf < 0) throw DomainError("MellinStrip: vanishing orders must be non-negative");
  if (static_cast<long long>(k0) + k_inf < 1) throw DomainError("MellinStrip: requires k0 + k_inf >= 1");
}

bool MellinStrip::contains(cplx s) const noexcept {
  bool left = k0 == unbounded || s.real() > -static_cast<double>(k0);
  bool right = k_inf == unbounded || s.real() < static_cast<double>(k_inf);
  return left && right;
}

MeromorphicProfile::MeromorphicProfile(Evaluator f, std::vector<PoleLattice> lattices, GrowthClass growth,
                                       double right_limit)
    : f_(std::move(f)), lattices_(std::move(lattices)), growth_(growth), right_limit_(right_limit) {
  if (!f_) throw DomainError("MeromorphicProfile: missing evaluator");
  for (const auto& l : lattices_)
    if (l.order < 1) throw DomainError("MeromorphicProfile: pole order must be positive");
}

double MeromorphicProfile::default_abscissa(double clearance) const {
  double m = -std::numeric_limits<double>::infinity();
  for (const auto& l : lattices_) m = std::max(m, l.base.real());
  if (!std::isfinite(m)) return std::min(1.0, right_limit_ - 0.5);
  double s0 = m + 0.5;
  if (s0 > right_limit_ - clearance) {
    if (right_limit_ - m < 2.0 * clearance) throw ContourError("no regular strip between the pole lattices");
    s0 = 0.5 * (m + right_limit_);
  }
  return s0;
}

std::vector<PoleLattice> MeromorphicProfile::poles_right_of(double re_min) const {
  std::vector<PoleLattice> pts;
  for (const auto& l : lattices_) {
    for (int k = 0;; ++k) {
      cplx p = l.base - 2.0 * k;
      if (p.real() <= re_min) break;
      auto it = std::find_if(pts.begin(), pts.end(), [&](const PoleLattice& q) { return std::abs(q.base - p) < 1e-8; });
      if (it != pts.end())
        it->order += l.order;
      else
        pts.push_back({p, l.order});
    }
  }
  std::sort(pts.begin(), pts.end(), [](const PoleLattice& a, const PoleLattice& b) {
    if (a.base.real() != b.base.real()) return a.base.real() > b.base.real();
    return a.base.imag() < b.base.imag();
  });
  return pts;
}

namespace {

cplx mellin_direct(const TestFunction& f, Parity delta, cplx s, const QuadratureConfig& q) {
  std::optional<Parity> p = f.parity();
  if (p && (*p + delta).odd()) return 0.0;
  auto g = [&](double x) -> cplx {
    if (p) return 2.0 * f(x);
    return f(x) + delta.sign() * f(-x);
  };
  double t_hi = std::log(f.effective_radius());
  double t_lo = std::max(std::log(q.decay_cutoff) / s.real(), -4000.0);
  t_lo = std::min(t_lo, t_hi - 1.0);
  double width = std::min(q.panel_width, 8.0 / std::max(std::abs(s.imag()), 1e-300));
  auto integrand = [&](double t) {
    double x = std::exp(t);
    return std::exp(s * t) * g(x);
  };

  // Head on (0, eps] from the Taylor series of g when enough derivative oracles exist.
  int k_max = std::min(f.max_derivative(), max_derivative_order);
  if (k_max >= 8) {
    std::vector<cplx> c(k_max + 1);
    double fact = 1.0;
    for (int k = 0; k <= k_max; ++k) {
      if (k > 0) fact *= k;
      // g(x) = f(x) + (-1)^delta f(-x) keeps only the terms with k = delta (mod 2)
      c[k] = Parity(k) == delta ? 2.0 * f.derivative(k, 0.0) / fact : 0.0;
    }
    for (double eps : {0.25, 0.1, 0.05, 0.02}) {
      double head_max = 0, last = std::abs(c[k_max]) * std::pow(eps, k_max) + std::abs(c[k_max - 1]) * std::pow(eps, k_max - 1);
      for (int k = 0; k <= k_max; ++k) head_max = std::max(head_max, std::abs(c[k]) * std::pow(eps, k));
      if (head_max == 0 || last > 1e-17 * head_max || std::log(eps) <= t_lo) continue;
      CompensatedSum head;
      double log_eps = std::log(eps);
      for (int k = 0; k <= k_max; ++k)
        if (c[k] != 0.0) head.add(c[k] * std::exp((s + double(k)) * log_eps) / (s + double(k)));
      head.add(integrate_panels(integrand, log_eps, t_hi, width, q.nodes_per_panel));
      return head.value();
    }
  }
  return integrate_panels(integrand, t_lo, t_hi, width, q.nodes_per_panel);
}

bool nonzero(cplx v) { return std::abs(v) > 1e-13; }

}  // namespace

cplx signed_mellin(const TestFunction& f, Parity delta, cplx s, const QuadratureConfig& quad) {
  if (f.decay_class() == DecayClass::sis_singular)
    throw DomainError("signed_mellin: requires a Schwartz or compactly supported input");
  if (s.real() > 0.5) return checked(mellin_direct(f, delta, s, quad), "signed_mellin");

  double n_near = std::nearbyint(-s.real());
  double dist = std::abs(s + n_near);
  if (n_near >= 0 && dist < 1e-3) {
    int n = static_cast<int>(n_near);
    bool matching = (Parity(n) == delta);
    bool singular = true;
    if (matching && n <= f.max_derivative()) singular = nonzero(f.derivative(n, 0.0));
    if (!matching) singular = false;
    if (singular) {
      if (dist < pole_tolerance) throw PoleError("signed_mellin: s on the pole lattice of M_delta f");
    } else {
      // Removable point: mean value over a small circle avoids 0/0 in the ladder.
      constexpr int k = 16;
      constexpr double r = 0.05;
      CompensatedSum acc;
      for (int j = 0; j < k; ++j) acc.add(signed_mellin(f, delta, s + r * std::exp(2.0 * pi * I * (j + 0.5) / double(k)), quad));
      return acc.value() / static_cast<double>(k);
    }
  }

  int m = static_cast<int>(std::floor(0.5 - s.real())) + 1;
  if (m > std::min(f.max_derivative(), max_derivative_order))
    throw DepthError("signed_mellin: continuation needs more derivative oracles than available");
  cplx denom = 1.0;
  for (int l = 0; l < m; ++l) denom *= (s + static_cast<double>(l));
  double sgn = (m % 2 == 0) ? 1.0 : -1.0;
  cplx inner = mellin_direct(f.derived(m), delta + m, s + static_cast<double>(m), quad);
  return checked(sgn * inner / denom, "signed_mellin");
}

cplx mellin_residue(const TestFunction& f, Parity delta, int n) {
  if (n < 0) throw DomainError("mellin_residue: n must be non-negative");
  if (Parity(n) != delta) throw ParityError("mellin_residue: n must have the parity of delta");
  double fact = std::tgamma(n + 1.0);
  return 2.0 * f.derivative(n, 0.0) / fact;
}

MeromorphicProfile mellin_profile(const TestFunction& f, Parity delta, const QuadratureConfig& quad) {
  std::vector<PoleLattice> lattices;
  if (!(f.parity() && (*f.parity() + delta).odd())) lattices.push_back({delta.odd() ? cplx{-1.0} : cplx{0.0}, 1});
  return MeromorphicProfile([f, delta, quad](cplx s) { return signed_mellin(f, delta, s, quad); }, lattices);
}

namespace {

bool collides(const MeromorphicProfile& h, double s0, double clearance) {
  if (s0 > h.right_limit() - clearance) return true;
  for (const auto& l : h.lattices()) {
    double re = l.base.real();
    if (re < s0 - clearance) continue;
    // nearest lattice point base - 2k to the line
    double k = std::max(0.0, std::round((re - s0) / 2.0));
    if (std::abs(re - 2.0 * k - s0) < clearance) return true;
  }
  return false;
}

}  // namespace

double resolve_abscissa(const MeromorphicProfile& h, const VerticalContour& contour) {
  double s0 = contour.abscissa;
  for (double cand : {s0, s0 + 0.5, s0 - 0.5})
    if (!collides(h, cand, contour.pole_clearance)) return cand;
  throw ContourError("mellin: contour collides with a pole lattice");
}

cplx mellin_invert(const MeromorphicProfile& h, Parity delta, double x, const VerticalContour& contour) {
  if (x == 0.0 || !std::isfinite(x)) throw DomainError("mellin_invert: x must be nonzero and finite");
  if (h.growth() != GrowthClass::rapid_decay) throw DomainError("mellin_invert: profile must decay rapidly");
  if (contour.nodes_per_panel < 1 || !(contour.half_height > 0)) throw ContourError("mellin_invert: bad contour");
  double s0 = resolve_abscissa(h, contour);
  double log_x = std::log(std::abs(x));
  auto integrand = [&](double t) {
    cplx s{s0, t};
    return h(s) * std::exp(-s * log_x);
  };
  double scale = 0.0;
  for (double t : {0.0, 0.5, -0.5, 1.5, -1.5, 3.0, -3.0}) scale = std::max(scale, std::abs(integrand(t)));
  if (scale == 0.0) return 0.0;
  double T = std::ceil(contour.half_height);
  auto edge = [&](double t) { return std::max(std::abs(integrand(t)), std::abs(integrand(-t))); };
  while (edge(T) > contour.tail_tolerance * scale && T < 200.0) T += 10.0;
  if (edge(T) > 1e-8 * scale) throw ConvergenceError("mellin_invert: integrand does not decay along the contour");
  cplx integral = integrate_panels(integrand, -T, T, 1.0, contour.nodes_per_panel);
  return sign_power(x, delta) * integral / (4.0 * pi);
}

namespace {

struct LaurentData {
  std::vector<cplx> coeffs;  // a_{-1}, a_{-2}, ...
  double scale = 0;          // max |H| on the circle
};

LaurentData laurent_data(const MeromorphicProfile& h, cplx s0, int order, double radius, int nodes) {
  if (order < 1 || nodes < 8 || !(radius > 0)) throw DomainError("laurent_coefficients: bad parameters");
  std::vector<cplx> values(static_cast<std::size_t>(nodes));
  std::vector<cplx> points(static_cast<std::size_t>(nodes));
  LaurentData out;
  for (int j = 0; j < nodes; ++j) {
    cplx u = radius * std::exp(2.0 * pi * I * (static_cast<double>(j) / nodes));
    points[static_cast<std::size_t>(j)] = u;
    values[static_cast<std::size_t>(j)] = h(s0 + u);
    out.scale = std::max(out.scale, std::abs(values[static_cast<std::size_t>(j)]));
  }
  for (int m = 1; m <= order; ++m) {
    CompensatedSum acc;
    for (std::size_t j = 0; j < values.size(); ++j) acc.add(values[j] * std::pow(points[j], m));
    out.coeffs.push_back(acc.value() / static_cast<double>(nodes));
  }
  return out;
}

constexpr double significance = 1e-9;

}  // namespace

std::vector<cplx> laurent_coefficients(const MeromorphicProfile& h, cplx s0, int order, double radius, int nodes) {
  return laurent_data(h, s0, order, radius, nodes).coeffs;
}

int detect_pole_order(const std::vector<cplx>& laurent, double radius, double scale) {
  int order = 0;
  for (std::size_t m = 1; m <= laurent.size(); ++m)
    if (std::abs(laurent[m - 1]) * std::pow(radius, -static_cast<double>(m)) > significance * scale)
      order = static_cast<int>(m);
  return order;
}

std::vector<ExpansionTerm> asymptotic_expansion(const MeromorphicProfile& h, Parity delta, double depth,
                                                double radius, int nodes) {
  if (h.growth() != GrowthClass::rapid_decay) throw DomainError("asymptotic_expansion: profile must decay rapidly");
  auto poles = h.poles_right_of(-depth);
  auto neighbours = h.poles_right_of(-depth - 4.0);
  std::vector<ExpansionTerm> terms;
  for (const auto& p : poles) {
    double r = radius;
    for (const auto& q : neighbours) {
      double d = std::abs(q.base - p.base);
      if (d > 1e-8) r = std::min(r, 0.4 * d);
    }
    if (p.order > max_log_index + 1) throw OrderOverflowError("asymptotic_expansion: declared order too large");
    auto data = laurent_data(h, p.base, p.order + 1, r, nodes);
    int order = detect_pole_order(data.coeffs, r, data.scale);
    if (order > p.order) throw OrderOverflowError("asymptotic_expansion: pole order exceeds the declared bound");
    double factorial = 1.0;
    for (int j = 0; j < order; ++j) {
      if (j > 0) factorial *= j;
      cplx a = data.coeffs[static_cast<std::size_t>(j)];
      if (std::abs(a) * std::pow(r, -(j + 1.0)) <= significance * data.scale) continue;
      double sgn = (j % 2 == 0) ? 1.0 : -1.0;
      terms.push_back({{-p.base, delta, j}, 0.5 * sgn * a / factorial});
    }
  }
  return terms;
}

cplx evaluate_expansion(const std::vector<ExpansionTerm>& terms, double x) {
  if (x == 0.0) throw DomainError("evaluate_expansion: x must be nonzero");
  double ax = std::abs(x), lx = std::log(ax);
  CompensatedSum acc;
  for (const auto& t : terms)
    acc.add(t.coefficient * sign_power(x, t.type.eta) * std::exp(t.type.alpha * lx) * std::pow(lx, t.type.log_index));
  return acc.value();
}

cplx mellin_parseval(const TestFunction& f, const MeromorphicProfile& sigma_mellin, Parity delta,
                     const VerticalContour& contour, const QuadratureConfig& quad) {
  auto mf = mellin_profile(f, delta, quad);
  double right = std::numeric_limits<double>::infinity();
  for (const auto& l : sigma_mellin.lattices()) right = std::min(right, 1.0 - l.base.real());
  MeromorphicProfile product([mf, sigma_mellin](cplx s) { return mf(s) * sigma_mellin(1.0 - s); }, mf.lattices(),
                             GrowthClass::rapid_decay, right);
  if (collides(product, contour.abscissa, contour.pole_clearance))
    throw ContourError("mellin_parseval: contour collides with a pole lattice");
  return mellin_invert(product, even, 1.0, contour);
}

cplx cutoff_mellin_residue(Parity delta) { return delta.odd() ? 0.0 : 2.0; }

double fourier_mellin_relation_residual(const TestFunction& f, Parity delta, cplx s, const QuadratureConfig& quad) {
  TestFunction fhat = fourier_numeric(f, f.effective_radius());
  cplx lhs = signed_mellin(fhat, delta, s, quad);
  cplx rhs = delta.sign() * g_delta(s, delta) * signed_mellin(f, delta, 1.0 - s, quad);
  return std::abs(lhs - rhs);
}

double measure_growth_exponent(const std::function<cplx(cplx)>& h, double sigma, double t_min, double t_max,
                               int samples) {
  if (!(t_min > 0) || !(t_max > t_min) || samples < 2) throw DomainError("measure_growth_exponent: bad range");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (int k = 0; k < samples; ++k) {
    double lt = std::log(t_min) + (std::log(t_max) - std::log(t_min)) * k / (samples - 1.0);
    double ly = std::log(std::abs(h(cplx{sigma, std::exp(lt)})) + 1e-300);
    sx += lt;
    sy += ly;
    sxx += lt * lt;
    sxy += lt * ly;
  }
  double n = samples;
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace mellinlab
