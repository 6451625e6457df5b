"""Reference value of the Green's-function magnitude constant.

term1 = (1/4) max_{0<r<=200} sqrt(r) |Y0(r)|
term2 = (1/4pi) max_{0<r<=200, phi0} sqrt(r) |int_{phi0}^{phi0+pi} exp(i r sin phi) dphi|

The inner integral is F = pi J0(r) + i pi H0(r) - 2i S(phi0) with H0 the
Struve function and S(phi0) = int_0^phi0 sin(r sin phi) dphi; the
maximum over phi0 is attained where the integrand sin(r sin phi) vanishes,
so S is evaluated (by scipy quad) at those points; r is refined with scipy.
"""
import numpy as np
from scipy import integrate, optimize, special
import mpmath as mp


def term1():
    r = np.linspace(1e-3, 200, 400001)
    v = np.sqrt(r) * np.abs(special.y0(r))
    best = 0.0
    for i in np.argsort(v)[-20:]:
        lo, hi = r[max(i - 1, 0)], r[min(i + 1, len(r) - 1)]
        f = lambda x: -float(mp.sqrt(x) * abs(mp.bessely(0, x)))
        res = optimize.minimize_scalar(f, bounds=(lo, hi), method="bounded", options={"xatol": 1e-12})
        best = max(best, -res.fun)
    return best / 4


def inner_max(r):
    base_re = np.pi * special.j0(r)
    base_im = np.pi * special.struve(0, r)
    S = lambda p: integrate.quad(lambda t: np.sin(r * np.sin(t)), 0, p, limit=400, epsabs=1e-13)[0]
    # candidate lobes: sin(r sin phi) = 0
    cands = [0.0, np.pi / 2]
    k = 1
    while k * np.pi < r:
        cands.append(np.arcsin(k * np.pi / r))
        k += 1
    best = 0.0
    for c in cands:
        val = abs(complex(base_re, base_im - 2 * S(c)))
        best = max(best, val)
    return best


def term2():
    r = np.linspace(0.01, 200, 20001)
    v = np.array([np.sqrt(x) * inner_max(x) for x in r])
    best = 0.0
    for i in np.argsort(v)[-12:]:
        lo, hi = r[max(i - 1, 0)], r[min(i + 1, len(r) - 1)]
        res = optimize.minimize_scalar(lambda x: -np.sqrt(x) * inner_max(x), bounds=(lo, hi),
                                       method="bounded", options={"xatol": 1e-10})
        best = max(best, -res.fun)
    return best / (4 * np.pi)


t1 = term1()
t2 = term2()
print("term1", repr(t1))
print("term2", repr(t2))
print("c_hat", repr(t1 + t2))
