"""Reference values computed with mpmath at 40 digits.

Writes tests/unit/oracle_values.hpp. The C++ tests compare against these
frozen numbers; rerun only when adding new reference points.
"""
import os
import mpmath as mp

mp.mp.dps = 40
PI = mp.pi


def G(s, d):
    s = mp.mpc(s)
    return 2 * (1j) ** d * (2 * PI) ** (-s) * mp.gamma(s) * mp.cos(PI * (s - d) / 2)


def c(z):
    z = mp.mpc(z)
    return "{%s, %s}" % (mp.nstr(z.real, 20, min_fixed=-1, max_fixed=-1), mp.nstr(z.imag, 20, min_fixed=-1, max_fixed=-1))


def r(x):
    return mp.nstr(mp.mpf(x), 20, min_fixed=-1, max_fixed=-1)


out = []


def table(name, rows):
    out.append("inline const std::vector<%s> %s{" % (rows[0][0], name))
    for _, body in rows:
        out.append("    {%s}," % body)
    out.append("};\n")


# Gamma kernel G_delta(s)
rows = []
for s in [0.5, 2, mp.mpc(-1.5, 0.7), mp.mpc(12, 3), mp.mpc(-7.3, -2), mp.mpc(25, 20), mp.mpc(0.2, -35)]:
    for d in (0, 1):
        rows.append(("KernelPoint", "%s, %d, %s" % (c(s), d, c(G(s, d)))))
table("kernel_points", rows)

# Gamma and incomplete Gamma
rows = []
for s in [mp.mpc(0.3, 0.2), mp.mpc(4.7, -3), mp.mpc(15, 10), mp.mpc(-2.5, 0.5), mp.mpc(40, 0), mp.mpc(0.5, 60)]:
    rows.append(("ComplexPair", "%s, %s" % (c(s), c(mp.gamma(s)))))
table("gamma_points", rows)

rows = []
for s, x in [(mp.mpc(2.5, 1), 3.0), (mp.mpc(0.7, 0), 0.2), (mp.mpc(6.5, 5), 40.0), (mp.mpc(-1.3, 0.4), 2.0),
             (mp.mpc(5.8, 4), 7.85), (mp.mpc(-4.7, -3), 150.0)]:
    rows.append(("IncompletePoint", "%s, %s, %s" % (c(s), r(x), c(mp.gammainc(s, x)))))
table("incomplete_gamma_points", rows)

rows = []
for z in [mp.mpc(0.5, 0.5), mp.mpc(2, 1), mp.mpc(0.3, 4), mp.mpc(3.5, -0.5), mp.mpc(5, 2), mp.mpc(-1.2, -7)]:
    rows.append(("ComplexPair", "%s, %s" % (c(z), c(mp.erf(z)))))
table("erf_points", rows)

# Zeta family
rows = []
for s, a in [(mp.mpc(2.3, 1), 0.25), (mp.mpc(-1.5, 2), 0.6), (mp.mpc(0.5, 20), 1.0), (mp.mpc(3, 0), 0.125)]:
    rows.append(("HurwitzPoint", "%s, %s, %s" % (c(s), r(a), c(mp.zeta(s, a)))))
table("hurwitz_points", rows)

rows = []
for s in [mp.mpc(-1, 0), mp.mpc(0.5, 14.134725), mp.mpc(3, 4), mp.mpc(-3.5, 1), mp.mpc(0, 0), mp.mpc(1.5, -9)]:
    rows.append(("ComplexPair", "%s, %s" % (c(s), c(mp.zeta(s)))))
table("zeta_points", rows)

# chi mod 4 (odd, real) and chi mod 5 with chi(2) = i
chi4 = [0, 1, 0, -1]
chi5 = [0, 1, 1j, -1j, -1]
rows = []
for s in [mp.mpc(2, 0), mp.mpc(0.3, 2), mp.mpc(-1.2, 0.5), mp.mpc(1, 0)]:
    rows.append(("ComplexPair", "%s, %s" % (c(s), c(mp.dirichlet(s, chi4)))))
table("l_mod4_points", rows)
rows = []
for s in [mp.mpc(2, 0), mp.mpc(0.5, 3), mp.mpc(-0.7, -1)]:
    rows.append(("ComplexPair", "%s, %s" % (c(s), c(mp.dirichlet(s, chi5)))))
table("l_mod5_points", rows)
out.append("inline const cplx gauss_sum_mod5 = %s;\n" % c(sum(chi5[a] * mp.expjpi(2 * mp.mpf(a) / 5) for a in range(5))))

# Signed Mellin transforms of the Gaussian family, continued analytically
rows = []
for s in [mp.mpc(0.7, 3), mp.mpc(-0.5, 1), mp.mpc(-2.3, -0.4), mp.mpc(2.5, 0), mp.mpc(0.4, 25)]:
    rows.append(("ComplexPair", "%s, %s" % (c(s), c(mp.gamma(s / 2) * PI ** (-s / 2)))))
table("mellin_gaussian_even", rows)
rows = []
for s in [mp.mpc(0.4, 2), mp.mpc(-1.6, 0.3), mp.mpc(1.5, -4)]:
    rows.append(("ComplexPair", "%s, %s" % (c(s), c(mp.gamma((s + 1) / 2) * PI ** (-(s + 1) / 2)))))
table("mellin_x_gaussian_odd", rows)


# T_{alpha,eta} of the Gaussian by direct oscillatory quadrature
def t_alpha(alpha, eta, y):
    sign = 1 if eta == 0 else -1
    f = lambda x: mp.exp(-PI / x ** 2) * x ** (-alpha - 1) * (mp.expjpi(-2 * x * y) + sign * mp.expjpi(2 * x * y))
    return mp.quadosc(f, [0, mp.inf], omega=2 * PI * abs(y))


rows = []
for alpha, eta, y in [(mp.mpc(1.2, 0.3), 0, 0.7), (mp.mpc(0.6, 0), 1, -1.5), (mp.mpc(2.5, -1), 0, 1.9)]:
    rows.append(("TalphaPoint", "%s, %d, %s, %s" % (c(alpha), eta, r(y), c(t_alpha(alpha, eta, y)))))
table("t_alpha_points", rows)

# Leading GL(2) coefficient for nu = 1/3: Res_{s=nu-1} of G_0(s+1-nu) G_0(s+1+nu) M_0 f(-s), halved
nu = mp.mpf(1) / 3
lead = G(2 * nu, 0) * mp.gamma((1 - nu) / 2) * PI ** (-(1 - nu) / 2)
out.append("inline const cplx gl2_third_leading = %s;\n" % c(lead))

# Ramanujan tau by brute product expansion of q prod (1 - q^n)^24
N = 3000
poly = [0] * N
poly[0] = 1
for n in range(1, N):
    for _ in range(24):
        for k in range(N - 1, n - 1, -1):
            poly[k] -= poly[k - n]
tau = poly  # tau(m) = poly[m - 1]
out.append("inline const std::vector<long long> tau_prefix{%s};\n" % ", ".join(str(tau[m]) for m in range(30)))
out.append("inline const long long tau_500 = %dLL;\n" % tau[499])
l4 = mp.fsum(mp.mpf(tau[m - 1]) * mp.mpf(m) ** (-mp.mpf(9.5)) for m in range(1, N + 1))
out.append("inline const double delta_l_at_4 = %s;\n" % r(l4))

header = """#pragma once
// Generated by tests/oracles/generate.py; do not edit.

#include <vector>

#include "mellinlab/types.hpp"

namespace oracle {

using mellinlab::cplx;

struct ComplexPair {
  cplx arg;
  cplx value;
};
struct KernelPoint {
  cplx s;
  int delta;
  cplx value;
};
struct IncompletePoint {
  cplx s;
  double x;
  cplx value;
};
struct HurwitzPoint {
  cplx s;
  double a;
  cplx value;
};
struct TalphaPoint {
  cplx alpha;
  int eta;
  double y;
  cplx value;
};

"""
path = os.path.join(os.path.dirname(__file__), "..", "unit", "oracle_values.hpp")
with open(path, "w") as fh:
    fh.write(header + "\n".join(out) + "\n}  // namespace oracle\n")
print("wrote", os.path.normpath(path))
