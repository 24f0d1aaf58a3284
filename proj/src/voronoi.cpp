#include "mellinlab/voronoi.hpp"

#include <algorithm>
#include <cmath>

#include "mellinlab/special_fn.hpp"

namespace mellinlab {
namespace {

constexpr double two_pi = 2.0 * pi;

// int_1^inf g(v) dv where g oscillates like e(-y v) with slowly varying amplitude.
cplx oscillatory_tail(const RealIntegrand& g, double y, double re_alpha, const QuadratureConfig& quad) {
  auto in_log = [&](double t) {
    double v = std::exp(t);
    return g(v) * v;
  };
  if (std::abs(y) < 1e-12) {
    double t_max = std::log(1.0 / quad.decay_cutoff) / re_alpha;
    return integrate_panels(in_log, 0.0, t_max, quad.panel_width, quad.nodes_per_panel);
  }
  const double half = 0.5 / std::abs(y);
  constexpr int pieces = 48;
  std::vector<cplx> partial;
  partial.reserve(pieces);
  CompensatedSum acc;
  for (int k = 0; k < pieces; ++k) {
    double a = 1.0 + k * half, b = a + half;
    acc.add(integrate_panels(in_log, std::log(a), std::log(b), quad.panel_width, quad.nodes_per_panel));
    partial.push_back(acc.value());
  }
  double err = 0;
  cplx limit = wynn_epsilon(partial, &err);
  if (err > 1e-7 * std::max(1.0, std::abs(limit)))
    throw ConvergenceError("t_alpha_direct: oscillatory tail did not converge");
  return limit;
}

}  // namespace

cplx t_alpha_direct(const TestFunction& f, KernelParams p, double y, const QuadratureConfig& quad) {
  if (p.alpha.real() <= 0) throw DomainError("t_alpha_direct: requires Re alpha > 0 (use the Mellin route)");
  if (std::abs(y) > direct_route_max_y) throw OscillationError("t_alpha_direct: |y| beyond the certified range");
  const cplx alpha = p.alpha;
  const double radius = f.effective_radius();
  CompensatedSum total;
  for (double sigma : {1.0, -1.0}) {
    double sgn = (p.eta.odd() && sigma < 0) ? -1.0 : 1.0;
    // u = 1/x: int f(u) (sg u)^eta |u|^{alpha-1} e(-y/u) du, split at |u| = 1.
    if (radius > 1.0) {
      auto outer = [&](double u) {
        return f(sigma * u) * std::exp((alpha - 1.0) * std::log(u)) * std::exp(-two_pi * I * sigma * y / u);
      };
      total.add(sgn * integrate_panels(outer, 1.0, radius, 0.25, quad.nodes_per_panel));
    }
    // |u| < 1 mapped back to v = 1/u in [1, inf).
    auto inner = [&](double v) {
      return f(sigma / v) * std::exp((-alpha - 1.0) * std::log(v)) * std::exp(-two_pi * I * sigma * y * v);
    };
    total.add(sgn * oscillatory_tail(inner, sigma * y, alpha.real(), quad));
  }
  return checked(total.value(), "t_alpha_direct");
}

MeromorphicProfile t_alpha_profile(const TestFunction& f, KernelParams p, Parity delta_out,
                                   const QuadratureConfig& quad) {
  Parity inner = delta_out + p.eta;
  bool vanishes = f.parity() && *f.parity() != inner;
  std::vector<PoleLattice> lattices;
  if (vanishes) return MeromorphicProfile([](cplx) { return cplx{0.0}; }, lattices);
  lattices.push_back({delta_out.odd() ? cplx{-1.0} : cplx{0.0}, 1});
  lattices.push_back({-p.alpha - static_cast<double>(inner.value()), 1});
  cplx alpha = p.alpha;
  return MeromorphicProfile(
      [f, alpha, delta_out, inner, quad](cplx s) {
        return delta_out.sign() * g_delta(s, delta_out) * signed_mellin(f, inner, s + alpha, quad);
      },
      lattices);
}

cplx t_alpha_mellin(const TestFunction& f, KernelParams p, Parity delta_out, double y,
                    std::optional<VerticalContour> contour) {
  if (y == 0.0) throw DomainError("t_alpha_mellin: y must be nonzero");
  auto h = t_alpha_profile(f, p, delta_out);
  VerticalContour c = contour.value_or(VerticalContour{});
  if (!contour) c.abscissa = h.default_abscissa(c.pole_clearance);
  return mellin_invert(h, delta_out, y, c);
}

cplx t_alpha_mellin_total(const TestFunction& f, KernelParams p, double y, std::optional<VerticalContour> contour) {
  return t_alpha_mellin(f, p, even, y, contour) + t_alpha_mellin(f, p, odd, y, contour);
}

MeromorphicProfile gl2_profile(const TestFunction& f, cplx nu, Parity delta, const QuadratureConfig& quad) {
  if (f.parity() && *f.parity() != delta) return MeromorphicProfile([](cplx) { return cplx{0.0}; }, {});
  double shift = static_cast<double>(delta.value());
  std::vector<PoleLattice> lattices{{nu - 1.0 - shift, 1}, {-nu - 1.0 - shift, 1}};
  return MeromorphicProfile(
      [f, nu, delta, quad](cplx s) {
        return g_delta(s + 1.0 - nu, delta) * g_delta(s + 1.0 + nu, delta) * signed_mellin(f, delta, -s, quad);
      },
      lattices, GrowthClass::rapid_decay, shift);
}

cplx gl2_transform(const TestFunction& f, cplx nu, double y, std::optional<VerticalContour> contour) {
  if (y == 0.0) throw DomainError("gl2_transform: y must be nonzero");
  CompensatedSum acc;
  for (Parity d : {even, odd}) {
    auto h = gl2_profile(f, nu, d);
    if (h.lattices().empty()) continue;
    VerticalContour c = contour.value_or(VerticalContour{});
    if (!contour) c.abscissa = h.default_abscissa(c.pole_clearance);
    acc.add(mellin_invert(h, d, y, c));
  }
  return acc.value();
}

MeromorphicProfile gl3_profile(const TestFunction& f, const GL3Params& p, const QuadratureConfig& quad) {
  if (f.parity() && *f.parity() != p.eta) throw DomainError("gl3_profile: input parity differs from eta");
  std::vector<PoleLattice> lattices;
  for (std::size_t j = 0; j < 3; ++j)
    lattices.push_back({p.lambdas[j] - 1.0 - static_cast<double>((p.deltas[j] + p.eta).value()), 1});
  return MeromorphicProfile(
      [f, p, quad](cplx s) {
        cplx v = p.eta.sign() * signed_mellin(f, p.eta, -s, quad);
        for (std::size_t j = 0; j < 3; ++j) v *= g_delta(s - p.lambdas[j] + 1.0, p.deltas[j] + p.eta);
        return v;
      },
      lattices, GrowthClass::rapid_decay, static_cast<double>(p.eta.value()));
}

cplx gl3_transform(const TestFunction& f, const GL3Params& p, double y, std::optional<VerticalContour> contour) {
  if (y == 0.0) throw DomainError("gl3_transform: y must be nonzero");
  auto h = gl3_profile(f, p);
  VerticalContour c = contour.value_or(VerticalContour{});
  if (!contour) c.abscissa = h.default_abscissa(c.pole_clearance);
  return mellin_invert(h, p.eta, y, c);
}

bool precedes(cplx alpha1, Parity eta1, cplx alpha2, Parity eta2, double snap) {
  cplx d = alpha2 - alpha1;
  if (std::abs(d.imag()) > snap) return false;
  double r = std::nearbyint(d.real());
  if (std::abs(d.real() - r) > snap || r < 0) return false;
  return Parity(static_cast<int>(r)) == eta1 + eta2;
}

namespace {

std::vector<SingularityType> predict_from_pairs(const std::vector<std::pair<cplx, Parity>>& pairs) {
  const std::size_t n = pairs.size();
  std::vector<SingularityType> out;
  for (std::size_t i = 0; i < n; ++i) {
    // Within a chain, the log index counts the elements strictly above this one.
    int above = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      bool ij = precedes(pairs[i].first, pairs[i].second, pairs[j].first, pairs[j].second);
      bool ji = precedes(pairs[j].first, pairs[j].second, pairs[i].first, pairs[i].second);
      if (ij && (!ji || j > i)) ++above;
    }
    out.push_back({1.0 - pairs[i].first, pairs[i].second, above});
  }
  return out;
}

}  // namespace

std::vector<SingularityType> predict_singularity_types(const GL3Params& p) {
  std::vector<std::pair<cplx, Parity>> pairs;
  for (std::size_t j = 0; j < 3; ++j) pairs.emplace_back(p.lambdas[j], p.deltas[j]);
  return predict_from_pairs(pairs);
}

std::vector<SingularityType> predict_gl2_singularity_types(cplx nu) { return predict_from_pairs({{nu, even}, {-nu, even}}); }

double separation_identity_residual(cplx s, cplx beta) {
  cplx lhs = gamma(s) * gamma(s + beta);
  cplx rhs = c_beta(beta) * h_factor(s + beta) * gamma(s) + c_beta(-beta) * h_factor(s) * gamma(s + beta);
  return std::abs(lhs - rhs);
}

namespace {

bool same_point(cplx a, cplx b) { return std::abs(a - b) < 1e-6; }

std::vector<ExtractedExponent> group_terms(const std::vector<ExpansionTerm>& terms) {
  std::vector<ExtractedExponent> out;
  for (const auto& t : terms) {
    auto it = std::find_if(out.begin(), out.end(), [&](const ExtractedExponent& e) { return same_point(e.exponent, t.type.alpha); });
    if (it == out.end())
      out.push_back({t.type.alpha, t.type.log_index});
    else
      it->max_log_index = std::max(it->max_log_index, t.type.log_index);
  }
  return out;
}

}  // namespace

ExpansionReport verify_expansion(const MeromorphicProfile& h, Parity delta,
                                 const std::vector<SingularityType>& predicted, double depth,
                                 const std::vector<double>& x_samples, double radius, double second_radius) {
  ExpansionReport rep;
  rep.predicted = predicted;
  rep.terms = asymptotic_expansion(h, delta, depth, radius);
  auto second = asymptotic_expansion(h, delta, depth, second_radius);
  rep.extracted = group_terms(rep.terms);

  // radius stability over terms present at both radii
  for (const auto& t : rep.terms) {
    auto it = std::find_if(second.begin(), second.end(), [&](const ExpansionTerm& u) {
      return same_point(u.type.alpha, t.type.alpha) && u.type.log_index == t.type.log_index;
    });
    double diff = it == second.end() ? std::abs(t.coefficient) : std::abs(it->coefficient - t.coefficient);
    rep.radius_stability = std::max(rep.radius_stability, diff);
  }
  if (second.size() != rep.terms.size()) rep.radius_stability = std::max(rep.radius_stability, 1.0);

  // expected max log index at each leading exponent
  std::vector<ExtractedExponent> expected;
  for (const auto& t : predicted) {
    cplx e = t.alpha + static_cast<double>((delta + t.eta).value());
    auto it = std::find_if(expected.begin(), expected.end(), [&](const ExtractedExponent& x) { return same_point(x.exponent, e); });
    if (it == expected.end())
      expected.push_back({e, t.log_index});
    else
      it->max_log_index = std::max(it->max_log_index, t.log_index);
  }
  rep.expected = expected;
  bool exact = true, consistent = true;
  for (const auto& e : expected) {
    auto it = std::find_if(rep.extracted.begin(), rep.extracted.end(), [&](const ExtractedExponent& x) { return same_point(x.exponent, e.exponent); });
    int got = it == rep.extracted.end() ? -1 : it->max_log_index;
    rep.leading.push_back({e.exponent, got});
    if (got != e.max_log_index) exact = false;
    if (got > e.max_log_index) consistent = false;
  }
  // every extracted exponent must sit in a predicted family e + 2k
  for (const auto& x : rep.extracted) {
    bool in_family = std::any_of(expected.begin(), expected.end(), [&](const ExtractedExponent& e) {
      cplx d = x.exponent - e.exponent;
      double k = std::nearbyint(d.real() / 2.0);
      return k >= 0 && same_point(d, 2.0 * k);
    });
    if (!in_family) exact = consistent = false;
  }
  rep.exact_match = exact;
  rep.consistent = consistent;

  if (x_samples.size() >= 2) {
    VerticalContour c;
    c.abscissa = h.default_abscissa(c.pole_clearance);
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (double x : x_samples) {
      cplx r = mellin_invert(h, delta, x, c) - evaluate_expansion(rep.terms, x);
      double lx = std::log(std::abs(x)), ly = std::log(std::abs(r) + 1e-300);
      sx += lx, sy += ly, sxx += lx * lx, sxy += lx * ly;
    }
    double n = static_cast<double>(x_samples.size());
    rep.remainder_exponent = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    double last = 0.0;
    for (const auto& x : rep.extracted) last = std::max(last, x.exponent.real());
    rep.remainder_ok = rep.terms.empty() ? rep.remainder_exponent > -1e-3 : rep.remainder_exponent > last;
  }
  return rep;
}

}  // namespace mellinlab
