#include "mellinlab/quadrature.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace mellinlab {
namespace {

GaussRule build_rule(int n) {
  GaussRule rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(pi * (i + 0.75) / (n + 0.5));
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      double dp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // recompute derivative at the converged node
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= n; ++k) {
      double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    double dp = n * (x * p1 - p0) / (x * x - 1.0);
    double w = 2.0 / ((1.0 - x * x) * dp * dp);
    auto ui = static_cast<std::size_t>(i);
    auto uj = static_cast<std::size_t>(n - 1 - i);
    rule.nodes[ui] = -x;
    rule.nodes[uj] = x;
    rule.weights[ui] = w;
    rule.weights[uj] = w;
  }
  return rule;
}

}  // namespace

const GaussRule& gauss_legendre(int n) {
  if (n < 1) throw DomainError("gauss_legendre: node count must be positive");
  static std::mutex mu;
  static std::map<int, GaussRule> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, build_rule(n)).first;
  return it->second;
}

cplx integrate_panels(const RealIntegrand& f, double a, double b, double max_panel, int nodes_per_panel) {
  if (b <= a) return 0.0;
  const GaussRule& rule = gauss_legendre(nodes_per_panel);
  auto panels = static_cast<long>(std::ceil((b - a) / max_panel));
  panels = std::max(panels, 1L);
  double h = (b - a) / static_cast<double>(panels);
  CompensatedSum sum;
  for (long p = 0; p < panels; ++p) {
    double lo = a + static_cast<double>(p) * h;
    double mid = lo + 0.5 * h;
    for (std::size_t k = 0; k < rule.nodes.size(); ++k) sum.add(rule.weights[k] * 0.5 * h * f(mid + 0.5 * h * rule.nodes[k]));
  }
  return sum.value();
}

cplx wynn_epsilon(std::span<const cplx> s, double* error) {
  const std::size_t n = s.size();
  if (n == 0) return 0.0;
  if (n < 3) {
    if (error) *error = n == 2 ? std::abs(s[1] - s[0]) : std::abs(s[0]);
    return s.back();
  }
  // e[k] holds column k of the epsilon table, built up row by row.
  std::vector<cplx> prev(s.begin(), s.end());
  std::vector<cplx> prev2(n + 1, 0.0);
  cplx best = s.back();
  cplx last_even = s.back();
  double err = std::abs(s[n - 1] - s[n - 2]);
  for (std::size_t col = 1; col < n; ++col) {
    std::vector<cplx> cur(n - col);
    bool ok = true;
    for (std::size_t i = 0; i + col < n; ++i) {
      cplx diff = prev[i + 1] - prev[i];
      if (std::abs(diff) < 1e-300) {
        ok = false;
        break;
      }
      cur[i] = (col == 1 ? cplx{0.0} : prev2[i + 1]) + 1.0 / diff;
    }
    if (!ok) break;
    if (col % 2 == 0) {
      cplx est = cur.back();
      err = std::abs(est - last_even);
      last_even = est;
      best = est;
    }
    prev2.assign(prev.begin(), prev.end());
    prev = std::move(cur);
  }
  if (error) *error = err;
  return best;
}

}  // namespace mellinlab
