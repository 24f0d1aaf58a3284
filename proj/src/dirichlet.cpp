#include "mellinlab/dirichlet.hpp"

#include <algorithm>
#include <array>
#include <memory>
#include <numeric>

#include "json.hpp"
#include "mellinlab/quadrature.hpp"
#include "mellinlab/special_fn.hpp"

namespace mellinlab {
namespace {

std::vector<int> prime_factors(int q) {
  std::vector<int> ps;
  for (int p = 2; p * p <= q; ++p) {
    if (q % p == 0) {
      ps.push_back(p);
      while (q % p == 0) q /= p;
    }
  }
  if (q > 1) ps.push_back(q);
  return ps;
}

long long mod(long long a, long long m) { return ((a % m) + m) % m; }

bool is_unit(long long a, int q) { return std::gcd(mod(a, q), static_cast<long long>(q)) == 1; }

// exp(2 pi i num / den) with exact values on the quarter turns.
cplx root_of_unity(long long num, long long den) {
  num = mod(num, den);
  if (num == 0) return 1.0;
  if (2 * num == den) return -1.0;
  if (4 * num == den) return I;
  if (4 * num == 3 * den) return -I;
  double t = 2.0 * pi * static_cast<double>(num) / static_cast<double>(den);
  return {std::cos(t), std::sin(t)};
}

struct CyclicFactor {
  int modulus;                  // prime power p^e
  int order;                    // order of the generator
  std::vector<int> log_table;   // discrete log of each residue mod `modulus`, -1 on non-units
};

// (Z/p^e)* as a product of cyclic factors, each with a discrete-log table.
std::vector<CyclicFactor> unit_group_factors(int p, int e) {
  int m = 1;
  for (int i = 0; i < e; ++i) m *= p;
  std::vector<CyclicFactor> out;
  if (p == 2) {
    if (e == 1) return out;
    if (e == 2) {
      CyclicFactor f{4, 2, std::vector<int>(4, -1)};
      f.log_table[1] = 0;
      f.log_table[3] = 1;
      out.push_back(f);
      return out;
    }
    // a = (-1)^u 5^v mod 2^e
    int ord5 = m / 4;
    CyclicFactor fu{m, 2, std::vector<int>(static_cast<std::size_t>(m), -1)};
    CyclicFactor fv{m, ord5, std::vector<int>(static_cast<std::size_t>(m), -1)};
    long long pw = 1;
    for (int v = 0; v < ord5; ++v) {
      fu.log_table[static_cast<std::size_t>(pw)] = 0;
      fv.log_table[static_cast<std::size_t>(pw)] = v;
      long long neg = mod(-pw, m);
      fu.log_table[static_cast<std::size_t>(neg)] = 1;
      fv.log_table[static_cast<std::size_t>(neg)] = v;
      pw = pw * 5 % m;
    }
    out.push_back(fu);
    out.push_back(fv);
    return out;
  }
  int phi = m / p * (p - 1);
  for (int g = 2; g < m; ++g) {
    if (g % p == 0) continue;
    std::vector<int> table(static_cast<std::size_t>(m), -1);
    long long pw = 1;
    bool generator = true;
    for (int j = 0; j < phi; ++j) {
      if (table[static_cast<std::size_t>(pw)] != -1) {
        generator = false;
        break;
      }
      table[static_cast<std::size_t>(pw)] = j;
      pw = pw * g % m;
    }
    if (generator) {
      out.push_back({m, phi, std::move(table)});
      return out;
    }
  }
  throw DomainError("unit_group_factors: no primitive root found");
}

bool induced_from_proper_divisor(const std::vector<cplx>& values, int q) {
  for (int p : prime_factors(q)) {
    int d = q / p;
    bool trivial_on_kernel = true;
    for (int a = 1; a < q && trivial_on_kernel; ++a) {
      if (!is_unit(a, q) || a % d != 1 % d) continue;
      if (std::abs(values[static_cast<std::size_t>(a)] - 1.0) > 1e-12) trivial_on_kernel = false;
    }
    if (trivial_on_kernel) return true;
  }
  return false;
}

// B_{2k} / (2k)!, k = 1..10
constexpr std::array<double, 10> bernoulli_over_factorial{
    1.0 / 6.0 / 2.0,
    -1.0 / 30.0 / 24.0,
    1.0 / 42.0 / 720.0,
    -1.0 / 30.0 / 40320.0,
    5.0 / 66.0 / 3628800.0,
    -691.0 / 2730.0 / 479001600.0,
    7.0 / 6.0 / 87178291200.0,
    -3617.0 / 510.0 / 20922789888000.0,
    43867.0 / 798.0 / 6402373705728000.0,
    -174611.0 / 330.0 / 2432902008176640000.0};

// Left of the critical line the head sum grows like N^{1-Re s} and cancels against the
// correction terms, so the shift shrinks there while staying well above |s|.
int em_shift(cplx s) { return s.real() >= 0.5 ? 50 : std::clamp(static_cast<int>(std::abs(s)) + 15, 20, 50); }

// Euler-Maclaurin for sum_{n>=0} (n+a)^{-s}. With drop_pole the 1/(s-1) part of
// the integral term is removed, leaving an entire function of s.
cplx hurwitz_em(cplx s, double a, bool drop_pole) {
  CompensatedSum acc;
  const int shift = em_shift(s);
  for (int n = 0; n < shift; ++n) acc.add(std::exp(-s * std::log(n + a)));
  double big = shift + a;
  double log_big = std::log(big);
  cplx s1 = s - 1.0;
  if (drop_pole) {
    // ((N+a)^{1-s} - 1) / (s - 1) = -L (e^u - 1)/u with u = -(s-1) L
    cplx u = -s1 * log_big;
    cplx ratio = std::abs(u) < 1e-300 ? cplx{1.0} : 2.0 * std::exp(0.5 * u) * std::sinh(0.5 * u) / u;
    acc.add(-log_big * ratio);
  } else {
    acc.add(std::exp(-s1 * log_big) / s1);
  }
  cplx base = std::exp(-s * log_big);
  acc.add(0.5 * base);
  // term k: B_{2k}/(2k)! * s (s+1) ... (s+2k-2) * (N+a)^{-s-2k+1}
  cplx rising = s;
  cplx power = base / big;
  for (std::size_t k = 0; k < bernoulli_over_factorial.size(); ++k) {
    acc.add(bernoulli_over_factorial[k] * rising * power);
    rising *= (s + (2.0 * k + 1.0)) * (s + (2.0 * k + 2.0));
    power /= big * big;
  }
  return acc.value();
}

void require_primitive(const DirichletCharacter& chi, const char* where) {
  if (!chi.primitive() || chi.modulus() < 2) throw PrimitivityError(std::string(where) + ": needs a primitive character with q > 1");
}

}  // namespace

int euler_phi(int q) {
  if (q < 1) throw DomainError("euler_phi: q must be positive");
  int r = q;
  for (int p : prime_factors(q)) r = r / p * (p - 1);
  return r;
}

DirichletCharacter::DirichletCharacter(int modulus, std::vector<cplx> values, int index)
    : q_(modulus), values_(std::move(values)), index_(index) {
  if (q_ < 1) throw DomainError("DirichletCharacter: modulus must be positive");
  if (values_.size() != static_cast<std::size_t>(q_)) throw DomainError("DirichletCharacter: value table size != q");
  principal_ = true;
  for (int a = 0; a < q_; ++a) {
    cplx v = values_[static_cast<std::size_t>(a)];
    if (!is_unit(a, q_)) {
      if (v != 0.0) throw DomainError("DirichletCharacter: nonzero value on a non-unit");
      continue;
    }
    if (std::abs(std::abs(v) - 1.0) > 1e-12) throw DomainError("DirichletCharacter: unit value off the unit circle");
    if (std::abs(v - 1.0) > 1e-12) principal_ = false;
  }
  cplx minus_one = values_[static_cast<std::size_t>(mod(-1, q_))];
  parity_ = (std::abs(minus_one + 1.0) < 1e-12) ? odd : even;
  primitive_ = q_ == 1 || !induced_from_proper_divisor(values_, q_);
}

cplx DirichletCharacter::operator()(long long n) const { return values_[static_cast<std::size_t>(mod(n, q_))]; }

DirichletCharacter DirichletCharacter::conjugate() const {
  std::vector<cplx> v(values_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = std::conj(values_[i]);
  return DirichletCharacter(q_, std::move(v), index_);
}

CoefficientSeries::CoefficientSeries(std::vector<cplx> a, Parity delta, double growth_exponent)
    : max_n_(static_cast<long long>(a.size())), delta_(delta), growth_(growth_exponent) {
  for (std::size_t i = 0; i < a.size(); ++i)
    c_ = std::max(c_, std::abs(a[i]) / std::pow(static_cast<double>(i + 1), growth_));
  auto data = std::make_shared<const std::vector<cplx>>(std::move(a));
  a_ = [data](long long n) { return (*data)[static_cast<std::size_t>(n - 1)]; };
}

CoefficientSeries::CoefficientSeries(Generator a, long long max_n, Parity delta, double growth_exponent,
                                     double growth_constant)
    : a_(std::move(a)), max_n_(max_n), delta_(delta), growth_(growth_exponent), c_(growth_constant) {
  if (!a_ || max_n_ < 0) throw DomainError("CoefficientSeries: bad generator");
}

CoefficientSeries CoefficientSeries::periodic(std::vector<cplx> values, Parity delta, long long max_n) {
  if (values.empty()) throw DomainError("CoefficientSeries::periodic: empty period");
  double c = 0;
  for (auto v : values) c = std::max(c, std::abs(v));
  auto data = std::make_shared<const std::vector<cplx>>(std::move(values));
  auto q = static_cast<long long>(data->size());
  return CoefficientSeries([data, q](long long n) { return (*data)[static_cast<std::size_t>(n % q)]; }, max_n, delta,
                           0.0, c);
}

cplx CoefficientSeries::operator[](long long n) const {
  if (n < 1 || n > max_n_) return 0.0;
  return a_(n);
}

cplx CoefficientSeries::signed_at(long long n) const {
  if (n == 0) throw DomainError("CoefficientSeries: no constant term");
  return n > 0 ? (*this)[n] : delta_.sign() * (*this)[-n];
}

std::vector<DirichletCharacter> characters_mod(int q) {
  if (q < 1) throw DomainError("characters_mod: q must be positive");
  std::vector<CyclicFactor> factors;
  {
    int r = q;
    for (int p : prime_factors(q)) {
      int e = 0;
      while (r % p == 0) r /= p, ++e;
      for (auto& f : unit_group_factors(p, e)) factors.push_back(std::move(f));
    }
  }
  long long lcm_order = 1;
  long long count = 1;
  for (const auto& f : factors) {
    lcm_order = std::lcm(lcm_order, static_cast<long long>(f.order));
    count *= f.order;
  }
  std::vector<DirichletCharacter> out;
  out.reserve(static_cast<std::size_t>(count));
  std::vector<int> k(factors.size(), 0);
  for (long long idx = 0; idx < count; ++idx) {
    long long rem = idx;
    for (std::size_t i = factors.size(); i-- > 0;) {
      k[i] = static_cast<int>(rem % factors[i].order);
      rem /= factors[i].order;
    }
    std::vector<cplx> values(static_cast<std::size_t>(q), 0.0);
    for (int a = 0; a < q; ++a) {
      if (!is_unit(a, q)) continue;
      long long num = 0;
      for (std::size_t i = 0; i < factors.size(); ++i) {
        int l = factors[i].log_table[static_cast<std::size_t>(a % factors[i].modulus)];
        num += static_cast<long long>(k[i]) * l * (lcm_order / factors[i].order);
      }
      values[static_cast<std::size_t>(a)] = root_of_unity(num, lcm_order);
    }
    out.emplace_back(q, std::move(values), static_cast<int>(idx));
  }
  return out;
}

cplx gauss_sum(const DirichletCharacter& chi) {
  CompensatedSum acc;
  const int q = chi.modulus();
  for (int a = 0; a < q; ++a) acc.add(chi(a) * root_of_unity(a, q));
  return acc.value();
}

double twisted_comb_identity_residual(const DirichletCharacter& chi, long long n) {
  require_primitive(chi, "twisted_comb_identity_residual");
  const int q = chi.modulus();
  CompensatedSum acc;
  for (int a = 0; a < q; ++a) acc.add(chi(a) * root_of_unity(mod(n, q) * a, q));
  return std::abs(acc.value() - gauss_sum(chi) * std::conj(chi(n)));
}

cplx hurwitz_zeta(cplx s, double a) {
  if (!(a > 0.0 && a <= 1.0)) throw DomainError("hurwitz_zeta: a must lie in (0, 1]");
  if (std::abs(s - 1.0) < pole_tolerance) throw PoleError("hurwitz_zeta: pole at s = 1");
  return checked(hurwitz_em(s, a, false), "hurwitz_zeta");
}

cplx riemann_zeta(cplx s) { return hurwitz_zeta(s, 1.0); }

cplx dirichlet_l(cplx s, const DirichletCharacter& chi) {
  const int q = chi.modulus();
  if (chi.principal()) {
    cplx z = riemann_zeta(s);
    for (int p : prime_factors(q)) z *= 1.0 - std::exp(-s * std::log(static_cast<double>(p)));
    return z;
  }
  CompensatedSum acc;
  for (int a = 1; a <= q; ++a) {
    cplx c = chi(a);
    if (c == 0.0) continue;
    acc.add(c * hurwitz_em(s, static_cast<double>(a) / q, true));
  }
  return checked(std::exp(-s * std::log(static_cast<double>(q))) * acc.value(), "dirichlet_l");
}

double zeta_functional_residual(cplx s) {
  if (std::abs(s) < pole_tolerance || std::abs(s - 1.0) < pole_tolerance)
    throw PoleError("zeta_functional_residual: s at 0 or 1");
  return std::abs(riemann_zeta(1.0 - s) - g_delta(s, even) * riemann_zeta(s));
}

cplx zeta_printed_form_ratio(cplx s) { return 2.0 * riemann_zeta(1.0 - s) / (g_delta(s, even) * riemann_zeta(s)); }

cplx dirichlet_functional_rhs(cplx s, const DirichletCharacter& chi) {
  require_primitive(chi, "dirichlet_functional_rhs");
  Parity d = chi.parity();
  double q = chi.modulus();
  return d.sign() * gauss_sum(chi) * g_delta(s, d) * std::exp((s - 1.0) * std::log(q)) * dirichlet_l(s, chi.conjugate());
}

double dirichlet_functional_residual(cplx s, const DirichletCharacter& chi) {
  require_primitive(chi, "dirichlet_functional_residual");
  return std::abs(dirichlet_l(1.0 - s, chi) - dirichlet_functional_rhs(s, chi));
}

std::pair<cplx, cplx> dirichlet_printed_form(cplx s, const DirichletCharacter& chi) {
  require_primitive(chi, "dirichlet_printed_form");
  Parity d = chi.parity();
  cplx left = dirichlet_l(s, chi);
  cplx right = d.sign() * g_delta(1.0 - s, d) * gauss_sum(chi) * dirichlet_l(s, chi.conjugate());
  return {left, right};
}

PeriodicMellinValue mellin_periodic(const CoefficientSeries& series, Parity delta, cplx s, long long n_trunc,
                                    double tolerance) {
  if (n_trunc < 1 || n_trunc > series.size()) throw DomainError("mellin_periodic: truncation outside the stored range");
  if ((series.delta() + delta).odd()) return {0.0, 0.0};
  double excess = s.real() - series.growth_exponent() - 1.0;
  if (excess <= 0) throw ConvergenceError("mellin_periodic: Re s too small for absolute convergence");
  cplx g = g_delta(s, delta);
  double tail = 2.0 * std::abs(g) * series.growth_constant() * std::pow(static_cast<double>(n_trunc), -excess) / excess;
  if (tail > tolerance) throw ConvergenceError("mellin_periodic: tail bound exceeds tolerance at this truncation");
  CompensatedSum acc;
  for (long long n = 1; n <= n_trunc; ++n) acc.add(series[n] * std::exp(-s * std::log(static_cast<double>(n))));
  return {checked(2.0 * g * acc.value(), "mellin_periodic"), tail};
}

std::string character_to_json(const DirichletCharacter& chi) {
  nlohmann::json values = nlohmann::json::array();
  for (auto v : chi.values()) values.push_back({v.real(), v.imag()});
  nlohmann::json j{{"q", chi.modulus()},
                   {"index", chi.index()},
                   {"values", values},
                   {"delta", chi.parity().value()},
                   {"primitive", chi.primitive()}};
  return j.dump();
}

}  // namespace mellinlab
