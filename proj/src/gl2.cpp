#include "mellinlab/gl2.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <regex>
#include <sstream>

#include <fmt/format.h>

#include "mellinlab/mellin.hpp"
#include "mellinlab/special_fn.hpp"

namespace mellinlab {

std::string to_string(AutomorphicKind kind) {
  return kind == AutomorphicKind::holomorphic ? "holomorphic" : "maass_toy";
}

AutomorphicData::AutomorphicData(CoefficientSeries a, cplx nu_, Parity delta_, AutomorphicKind kind_)
    : coefficients(std::move(a)), nu(nu_), delta(delta_), kind(kind_) {
  if (coefficients.size() < 1 || std::abs(coefficients[1] - 1.0) > 1e-12)
    throw DomainError("AutomorphicData: coefficients must be normalized with a_1 = 1");
}

std::vector<std::int64_t> ramanujan_tau(int n) {
  if (n < 1 || n > ramanujan_tau_max) throw DomainError("ramanujan_tau: N must lie in [1, 10000]");
  __extension__ using wide = __int128;
  // prod (1 - q^k)^24 = sum c_m q^m satisfies m c_m = -24 sum_{j=1}^m sigma(j) c_{m-j}.
  std::vector<wide> sigma(n, 0);
  for (int d = 1; d < n; ++d)
    for (int m = d; m < n; m += d) sigma[m] += d;
  std::vector<wide> c(n, 0);
  c[0] = 1;
  for (int m = 1; m < n; ++m) {
    wide acc = 0;
    for (int j = 1; j <= m; ++j) {
      wide term;
      if (__builtin_mul_overflow(sigma[j], c[m - j], &term) || __builtin_add_overflow(acc, term, &acc))
        throw OverflowError("ramanujan_tau: intermediate sum overflows 128 bits");
    }
    c[m] = -24 * acc / m;
  }
  std::vector<std::int64_t> tau(n);
  constexpr wide lo = std::numeric_limits<std::int64_t>::min();
  constexpr wide hi = std::numeric_limits<std::int64_t>::max();
  for (int m = 0; m < n; ++m) {
    if (c[m] < lo || c[m] > hi)
      throw OverflowError(fmt::format("ramanujan_tau: tau({}) does not fit in 64 bits", m + 1));
    tau[m] = static_cast<std::int64_t>(c[m]);
  }
  return tau;
}

AutomorphicData delta_data(int n_coefficients) {
  auto tau = ramanujan_tau(n_coefficients);
  std::vector<cplx> a(tau.size());
  for (std::size_t i = 0; i < tau.size(); ++i)
    a[i] = static_cast<double>(tau[i]) * std::pow(static_cast<double>(i + 1), -5.5);
  return AutomorphicData(CoefficientSeries(std::move(a), even, 0.5), cplx{-5.5}, even, AutomorphicKind::holomorphic);
}

namespace {

// k with 1 - 2 nu = 2k; the continuation needs k to be an integer.
int weight_index(cplx nu) {
  double k = 0.5 - nu.real();
  if (std::abs(nu.imag()) > 1e-12 || std::abs(k - std::nearbyint(k)) > 1e-12)
    throw DomainError("completed_l: only nu in 1/2 + Z is supported");
  return static_cast<int>(std::nearbyint(k));
}

// Bound for sum_{n > N} C n^g (2 pi n)^{-sigma} |Gamma(w, 2 pi n t)|.
double incomplete_tail(double c, double g, double sigma, int n_terms, double t) {
  double x = 2.0 * pi * (n_terms + 1) * t;
  if (x < 2.0 * std::max(sigma - 1.0, 0.0) + 1.0) return std::numeric_limits<double>::infinity();
  double first = c * std::pow(n_terms + 1.0, g) * std::pow(2.0 * pi * (n_terms + 1), -sigma) * 2.0 *
                 std::pow(x, sigma - 1.0) * std::exp(-x);
  // consecutive terms shrink at least by exp(-2 pi t) up to the polynomial factor
  double ratio = std::exp(-2.0 * pi * t) * std::pow((n_terms + 2.0) / (n_terms + 1.0), std::abs(g) + 1 + std::abs(sigma));
  return ratio < 1 ? first / (1 - ratio) : std::numeric_limits<double>::infinity();
}

}  // namespace

CompletedValue completed_l(cplx s, const AutomorphicData& data, int n_terms, double split, double tolerance) {
  if (split <= 0) throw DomainError("completed_l: split must be positive");
  int k = weight_index(data.nu);
  const double eps = (k % 2 == 0) ? 1.0 : -1.0;
  const cplx w = s - data.nu, w_dual = 1.0 - s - data.nu;
  const auto& a = data.coefficients;
  const long long top = std::min<long long>(n_terms, a.size());
  CompensatedSum acc;
  for (long long n = 1; n <= top; ++n) {
    cplx b = a[n] * std::pow(static_cast<double>(n), -data.nu);
    if (b == 0.0) continue;
    double x = 2.0 * pi * static_cast<double>(n);
    acc.add(b * (std::exp(-w * std::log(x)) * upper_incomplete_gamma(w, x * split) +
                 eps * std::exp(-w_dual * std::log(x)) * upper_incomplete_gamma(w_dual, x / split)));
  }
  double g = a.growth_exponent() - data.nu.real();
  double tail = incomplete_tail(a.growth_constant(), g, w.real(), n_terms, split) +
                incomplete_tail(a.growth_constant(), g, w_dual.real(), n_terms, 1.0 / split);
  if (!(tail <= tolerance * std::max(1.0, std::abs(acc.value()))))
    throw ConvergenceError(fmt::format("completed_l: tail bound {:.3g} exceeds tolerance", tail));
  return {checked(acc.value(), "completed_l"), tail};
}

cplx l_value(cplx s, const AutomorphicData& data, int n_terms, double split) {
  cplx w = s - data.nu;
  if (distance_to_gamma_poles(w) < pole_tolerance) throw PoleError("l_value: Gamma factor has a pole");
  cplx lam = completed_l(s, data, n_terms, split).value;
  return checked(lam * std::exp(w * std::log(2.0 * pi) - log_gamma(w)), "l_value");
}

double gl2_functional_residual(cplx s, const AutomorphicData& data, int n_terms, double split) {
  cplx w = s - data.nu, w_dual = 1.0 - s - data.nu;
  if (distance_to_gamma_lattice(w, data.delta) < pole_tolerance ||
      distance_to_gamma_lattice(w_dual, data.delta) < pole_tolerance)
    throw PoleError("gl2_functional_residual: argument on a kernel pole");
  cplx left = g_delta(w, data.delta) * l_value(s, data, n_terms, split);
  cplx right = data.delta.sign() * g_delta(w_dual, data.delta) * l_value(1.0 - s, data, n_terms, split);
  return std::abs(left - right);
}

ConverseReport converse_diagnostic(const AutomorphicData& data, const DiagnosticGrid& grid, double tolerance,
                                   int n_terms) {
  ConverseReport rep;
  try {
    for (double re : grid.re_values) {
      LineSummary line{re, 0, 0, 0};
      for (double im : grid.im_values) {
        cplx s{re, im};
        cplx l = l_value(s, data, n_terms);
        cplx kl = g_delta(s - data.nu, data.delta) * l;
        double r = gl2_functional_residual(s, data, n_terms);
        if (!std::isfinite(std::abs(kl)) || !std::isfinite(r)) rep.finite = false;
        line.max_l = std::max(line.max_l, std::abs(l));
        line.max_kernel_l = std::max(line.max_kernel_l, std::abs(kl));
        line.max_residual = std::max(line.max_residual, r);
      }
      rep.max_residual = std::max(rep.max_residual, line.max_residual);
      rep.lines.push_back(line);
    }
    rep.growth_exponent = measure_growth_exponent(
        [&](cplx s) { return g_delta(s - data.nu, data.delta) * l_value(s, data, n_terms); }, grid.growth_sigma,
        grid.growth_t_min, grid.growth_t_max, 12);
  } catch (const Error& e) {
    rep.finite = false;
    rep.failure = e.what();
    return rep;
  }
  if (!rep.finite || !std::isfinite(rep.growth_exponent))
    rep.failure = "non-finite values on the grid";
  else if (rep.max_residual >= tolerance)
    rep.failure = fmt::format("functional-equation residual {:.3g} exceeds {:.3g}", rep.max_residual, tolerance);
  rep.passed = rep.failure.empty();
  return rep;
}

AutomorphicData read_coefficients(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) throw ConfigError("coefficient file: missing header");
  static const std::regex header_re(
      R"(#\s*nu=([-+0-9.eE]+),([-+0-9.eE]+)\s+delta=([01])\s+kind=(holomorphic|maass_toy)\s*)");
  std::smatch m;
  if (!std::regex_match(header, m, header_re)) throw ConfigError("coefficient file: malformed header: " + header);
  cplx nu{std::stod(m[1]), std::stod(m[2])};
  Parity delta(m[3] == "1" ? 1 : 0);
  auto kind = m[4] == "holomorphic" ? AutomorphicKind::holomorphic : AutomorphicKind::maass_toy;

  std::vector<cplx> a;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    long long n;
    std::string value;
    if (!(ls >> n >> value)) throw ConfigError("coefficient file: bad line: " + line);
    if (n != static_cast<long long>(a.size()) + 1) throw ConfigError("coefficient file: indices must run 1, 2, ...");
    auto comma = value.find(',');
    try {
      a.emplace_back(comma == std::string::npos ? cplx{std::stod(value)}
                                                : cplx{std::stod(value.substr(0, comma)), std::stod(value.substr(comma + 1))});
    } catch (const std::exception&) {
      throw ConfigError("coefficient file: bad value: " + value);
    }
  }
  if (a.empty()) throw ConfigError("coefficient file: no coefficients");
  try {
    return AutomorphicData(CoefficientSeries(std::move(a), delta, 0.5), nu, delta, kind);
  } catch (const DomainError& e) {
    throw ConfigError(std::string("coefficient file: ") + e.what());
  }
}

AutomorphicData load_coefficients(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open coefficient file " + path);
  return read_coefficients(in);
}

void write_coefficients(std::ostream& out, const AutomorphicData& data) {
  out << fmt::format("# nu={:.17g},{:.17g} delta={} kind={}\n", data.nu.real(), data.nu.imag(), data.delta.value(),
                     to_string(data.kind));
  for (long long n = 1; n <= data.coefficients.size(); ++n) {
    cplx v = data.coefficients[n];
    if (v.imag() == 0)
      out << fmt::format("{} {:.17g}\n", n, v.real());
    else
      out << fmt::format("{} {:.17g},{:.17g}\n", n, v.real(), v.imag());
  }
}

}  // namespace mellinlab
