#!/usr/bin/env python3
"""Generates the frozen reference values used by the C++ test suites.

Run:  python3 tests/oracles/generate_reference_values.py

Each block prints constants that are pasted verbatim into the tests.  The
discrete formulas replicated here (stencils, trapezoid weights) are the
documented contracts of the library, evaluated independently with
numpy/sympy/mpmath so the tests do not depend on the implementation under
test.
"""

import mpmath as mp
import numpy as np
import sympy as sp

mp.mp.dps = 50


def fmt(x):
    return mp.nstr(mp.mpf(x), 17, strip_zeros=False)


# ---------------------------------------------------------------- stencils
# One-dimensional second-order difference formulas on a uniform grid,
# matching the operator contracts: central interior, one-sided boundary.

def grad_1d(f, h):
    n = len(f)
    g = np.empty(n)
    g[0] = (-3.0 * f[0] + 4.0 * f[1] - f[2]) / (2.0 * h)
    g[-1] = (3.0 * f[-1] - 4.0 * f[-2] + f[-3]) / (2.0 * h)
    for j in range(1, n - 1):
        g[j] = (f[j + 1] - f[j - 1]) / (2.0 * h)
    return g


def trap_weights(n):
    w = np.ones(n)
    w[0] = w[-1] = 0.5
    return w


def l2_sq(f, h):
    """Squared trapezoid L2 norm of one component on a 1-D grid."""
    return h * np.sum(trap_weights(len(f)) * f * f)


print("== pressure law: a=1, gamma=1.4 ==")
print("p(2)      =", fmt(mp.power(2, mp.mpf("1.4"))))
print("p'(2)     =", fmt(mp.mpf("1.4") * mp.power(2, mp.mpf("0.4"))))

print()
print("== weighted_l2 hand value: 5-node line, L=1, h=0.25 ==")
rho = np.array([0.0, 1.0, 4.0, 2.0, 3.0])
w = np.array([5.0, 2.0, 1.0, -1.0, 2.0])
val2 = 0.25 * np.sum(trap_weights(5) * rho * w * w)
print("rho  =", rho)
print("w    =", w)
print("value =", fmt(mp.sqrt(mp.mpf(val2))))

print()
print("== psi_distance hand value: 5-node line, L=1 ==")
h = 0.25
rho_a = np.array([1.0, 2.0, 1.5, 1.0, 0.5])
u_a = np.array([0.0, 0.3, -0.2, 0.1, 0.0])
d_a = np.array([
    [1.0, 0.9, 0.8, 0.9, 1.0],
    [0.0, 0.1, 0.3, 0.2, 0.0],
    [0.0, 0.2, 0.1, 0.1, 0.0],
])
rho_b = np.array([1.0, 1.8, 1.6, 1.1, 0.5])
u_b = np.array([0.0, 0.25, -0.1, 0.05, 0.0])
d_b = np.array([
    [1.0, 0.85, 0.85, 0.95, 1.0],
    [0.0, 0.15, 0.25, 0.15, 0.0],
    [0.0, 0.10, 0.15, 0.05, 0.0],
])
rho_bar = rho_a - rho_b
d_bar = d_a - d_b
u_bar = u_a - u_b
psi = l2_sq(rho_bar, h)
psi += sum(l2_sq(d_bar[k], h) for k in range(3))
psi += sum(l2_sq(grad_1d(d_bar[k], h), h) for k in range(3))
psi += h * np.sum(trap_weights(5) * rho_a * u_bar * u_bar)
print("psi =", fmt(mp.mpf(psi)))

print()
print("== W^{1,6} of rho = 1 + x on a 5-node line, L=1 ==")
x = np.linspace(0.0, 1.0, 5)
r = 1.0 + x
p6 = 0.25 * np.sum(trap_weights(5) * r**6)
g = grad_1d(r, 0.25)           # exactly 1 everywhere
g6 = 0.25 * np.sum(trap_weights(5) * np.abs(g) ** 6)
print("||rho||_6^6      =", fmt(mp.mpf(p6)))
print("||drho||_6^6     =", fmt(mp.mpf(g6)))
print("W16 norm         =", fmt(mp.power(mp.mpf(p6) + mp.mpf(g6), mp.mpf(1) / 6)))

print()
print("== internal energy density: a=1, gamma=1.4, rho=1.001, |Omega|=1 ==")
print("a rho^gamma/(gamma-1) =", fmt(mp.power(mp.mpf("1.001"), mp.mpf("1.4")) / mp.mpf("0.4")))

print()
print("== Ericksen stress S11, d=(0.3 sin(pi x), 0.2 sin(2 pi x), 1-0.1 sin(pi x)), sigma=0.8, x=0.5 ==")
xx = sp.symbols("x")
d1 = sp.Rational(3, 10) * sp.sin(sp.pi * xx)
d2 = sp.Rational(1, 5) * sp.sin(2 * sp.pi * xx)
d3 = 1 - sp.Rational(1, 10) * sp.sin(sp.pi * xx)
sigma = sp.Rational(4, 5)
gr2 = sum(sp.diff(dk, xx) ** 2 for dk in (d1, d2, d3))
Fd = (sum(dk**2 for dk in (d1, d2, d3)) - 1) ** 2 / (4 * sigma**2)
S11 = gr2 - (gr2 / 2 + Fd)
print("S11(0.5) =", fmt(mp.mpf(sp.N(S11.subs(xx, sp.Rational(1, 2)), 30).__str__())))

print()
print("== transport closed-form solution sanity check ==")
# velocity v(x) = beta sin(pi x) on (0,1); density rho0(x) = 1 + 0.5 sin(pi x)
# claimed solution:
#   X0(t,x)  = (2/pi) atan2(sin(pi x/2) e^{-pi beta t}, cos(pi x/2))
#   rho(t,x) = rho0(X0) e^{-pi beta t} / (cos^2(pi x/2) + sin^2(pi x/2) e^{-2 pi beta t})
beta = 0.4


def rho0_fn(x):
    return 1.0 + 0.5 * np.sin(np.pi * x)


def exact_rho(t, x):
    s = np.sin(np.pi * x / 2)
    c = np.cos(np.pi * x / 2)
    e = np.exp(-np.pi * beta * t)
    x0 = (2 / np.pi) * np.arctan2(s * e, c)
    return rho0_fn(x0) * e / (c * c + s * s * e * e)


# verify against a high-order numeric integration of the characteristic ODE
# and the divergence integral
from scipy.integrate import solve_ivp  # noqa: E402

t_end = 0.37
worst = 0.0
for xq in np.linspace(0.05, 0.95, 19):
    sol = solve_ivp(lambda tt, y: beta * np.sin(np.pi * y), (t_end, 0.0), [xq],
                    rtol=1e-12, atol=1e-14, dense_output=True)
    x0 = sol.y[0, -1]
    div_int = solve_ivp(
        lambda tt, y: [beta * np.sin(np.pi * y[0]),
                       beta * np.pi * np.cos(np.pi * y[0])],
        (t_end, 0.0), [xq, 0.0], rtol=1e-12, atol=1e-14)
    # integral from t_end down to 0 accumulates with a minus sign
    I = -div_int.y[1, -1]
    rho_ode = rho0_fn(x0) * np.exp(-I)
    worst = max(worst, abs(rho_ode - exact_rho(t_end, xq)))
print("max |closed form - ODE quadrature| =", worst, "(expect < 1e-9)")

print()
print("== manufactured director forcing (1D), nu=0.7, sigma=0.9, m=(0,0,1) ==")
t = sp.symbols("t")
nu = sp.Rational(7, 10)
sig = sp.Rational(9, 10)
m_vec = (0, 0, 1)
ds = (sp.Rational(3, 10) * sp.sin(sp.pi * xx) * (1 + t / 2),
      sp.Rational(1, 5) * sp.sin(2 * sp.pi * xx) * (1 - t / 4),
      1 + sp.Rational(1, 10) * sp.sin(sp.pi * xx) * t)
vs = sp.Rational(2, 5) * sp.sin(sp.pi * xx) * (1 + sp.Rational(3, 10) * t)
ns = (sp.Rational(1, 4) * sp.sin(sp.pi * xx),
      -sp.Rational(3, 20) * sp.sin(2 * sp.pi * xx) * (1 + t / 5),
      1 + sp.Rational(1, 10) * sp.sin(sp.pi * xx))
inner = sum((ns[k] + m_vec[k]) * (ds[k] - m_vec[k]) for k in range(3))
for k in range(3):
    Fk = (sp.diff(ds[k], t) + vs * sp.diff(ds[k], xx)
          - nu * sp.diff(ds[k], xx, 2) + nu / sig**2 * inner * ns[k])
    print(f"F{k} = {sp.ccode(sp.simplify(Fk))}")

print()
print("== manufactured momentum forcing (1D), mu=0.8, lambda=0.6, a=0.9, gamma=1.4, sigma=0.9 ==")
mu = sp.Rational(4, 5)
lam = sp.Rational(3, 5)
a_p = sp.Rational(9, 10)
gam = sp.Rational(7, 5)
rho_s = sp.Rational(6, 5) + sp.Rational(3, 10) * sp.sin(2 * sp.pi * xx) * (1 + t / 5)
u_s = sp.Rational(1, 2) * sp.sin(sp.pi * xx) * (1 + sp.Rational(2, 5) * t)
v_s = sp.Rational(3, 10) * sp.sin(2 * sp.pi * xx) * (1 - sp.Rational(3, 10) * t)
dm = (sp.Rational(3, 10) * sp.sin(sp.pi * xx) * (1 + t / 10),
      sp.Rational(1, 5) * sp.sin(2 * sp.pi * xx),
      sp.Integer(1))
dm_sq = sum(dk**2 for dk in dm)
f_gl = [(dm_sq - 1) / sig**2 * dk for dk in dm]
elastic = sum(sp.diff(dm[k], xx) * (sp.diff(dm[k], xx, 2) - f_gl[k]) for k in range(3))
Fm = (rho_s * sp.diff(u_s, t) + rho_s * v_s * sp.diff(u_s, xx)
      + sp.diff(a_p * rho_s**gam, xx) - mu * sp.diff(u_s, xx, 2) + lam * elastic)
print("Fm =", sp.ccode(sp.simplify(Fm)))
