#!/usr/bin/env python3
"""Generates the high-precision fixture tables under tests/fixtures/.

Everything here is computed with mpmath at 40 significant digits and written
as 32-digit decimal strings; the C++ tests parse them back to double (which
rounds correctly) and compare against the library at the stated tolerances.

Run from the repository root:  python3 tools/oracle/gen_fixtures.py
"""
import json
import os

import mpmath as mp

mp.mp.dps = 40

OUT_DIR = os.path.join(os.path.dirname(__file__), "..", "..", "tests", "fixtures")
LN2PI = mp.log(2 * mp.pi)


def s32(x):
    return mp.nstr(mp.mpf(x), 32, strip_zeros=False)


def cplx(z):
    return {"re": s32(z.real), "im": s32(z.imag)}


def chi(s):
    return 2 * mp.gamma(s) * mp.cos(mp.pi * s / 2) * (2 * mp.pi) ** (-s)


def cpcm(rho):
    g = mp.gamma(mp.mpc(0.5, rho))
    x = mp.pi * rho / 2
    cp = mp.cosh(x) * g.real + mp.sinh(x) * g.imag
    cm = -mp.sinh(x) * g.real + mp.cosh(x) * g.imag
    return cp, cm


def factors(rho):
    cp, cm = cpcm(rho)
    rp = rho * LN2PI
    sq = mp.sqrt(mp.pi)
    q = (cp * mp.cos(rp) + cm * mp.sin(rp)) / sq
    p = (cm * mp.cos(rp) - cp * mp.sin(rp)) / sq
    return {"rho": s32(rho), "cp": s32(cp), "cm": s32(cm),
            "n": s32(-p / 2), "dr": s32((1 - q) / 2)}


def f24(rho):
    cp, cm = cpcm(rho)
    rp = rho * LN2PI
    return cm * mp.cos(rp) - cp * mp.sin(rp)


def find_root(f, a, b, step):
    prev_t, prev_v = None, None
    t = mp.mpf(a)
    while t <= b:
        v = f(t)
        if prev_v is not None and mp.sign(v) != mp.sign(prev_v):
            return mp.findroot(f, (prev_t, t), solver="bisect", tol=mp.mpf("1e-30"))
        prev_t, prev_v = t, v
        t += mp.mpf(step)
    raise RuntimeError("no sign change")


fx = {}

# ---- constants -------------------------------------------------------------
fx["euler_gamma"] = s32(mp.euler)
fx["psi_half"] = s32(-mp.euler - 2 * mp.log(2))
fx["pi_over_cosh_pi"] = s32(mp.pi / mp.cosh(mp.pi))
fx["zeta_2"] = s32(mp.zeta(2))
fx["zeta_prime_2"] = s32(mp.zeta(2, derivative=1))
fx["log_4pi2"] = s32(mp.log(4 * mp.pi ** 2))
fx["two_pi"] = s32(2 * mp.pi)

# ---- gamma / digamma / zeta point values -----------------------------------
gamma_pts = [(0.5, 1), (5, 0), (2, 10), (0.3, 10), (-0.3, 2), (0.05, 80),
             (0.9, 50), (0.5, 200), (2, 200), (-0.99, 0.5), (-1, 3),
             (0.5, 0.5), (1.5, 100), (0.25, 3)]
fx["gamma"] = [dict(sigma=s32(s), rho=s32(r), **cplx(mp.gamma(mp.mpc(s, r))))
               for (s, r) in gamma_pts]

digamma_pts = [(1, 0), (0.5, 0), (0.3, 7), (0.25, 3), (2, 50), (0.05, 80),
               (1.5, 0.5), (-0.7, 2), (0.5, 6.5)]
fx["digamma"] = [dict(sigma=s32(s), rho=s32(r), **cplx(mp.digamma(mp.mpc(s, r))))
                 for (s, r) in digamma_pts]

zeta_pts = [(2, 0), (0, 0), (0.3, 0), (0.3, 10), (0.7, 10), (0.05, 0.5),
            (0.95, 80), (0.5, 20), (0.5, 100), (-1, 5), (2, 60), (0.5, 250),
            (1.5, 0.2), (-0.5, 33.3)]
fx["zeta"] = [dict(sigma=s32(s), rho=s32(r), **cplx(mp.zeta(mp.mpc(s, r))))
              for (s, r) in zeta_pts]

# d^m/drho^m zeta = i^m * zeta^(m)
deriv_pts = [(2, 0, 1), (0.5, 20, 1), (0.5, 20, 2), (0.3, 10, 1), (0.3, 10, 2),
             (0.5, 60, 1), (0.05, 3, 2)]
fx["zeta_rho_deriv"] = [
    dict(sigma=s32(s), rho=s32(r), m=m,
         **cplx(mp.mpc(0, 1) ** m * mp.zeta(mp.mpc(s, r), derivative=m)))
    for (s, r, m) in deriv_pts]

chi_pts = [(0.25, 3), (0.3, 10), (0.05, 80), (0.9, 50), (0.5, 7)]
fx["chi"] = [dict(sigma=s32(s), rho=s32(r), **cplx(chi(mp.mpc(s, r))))
             for (s, r) in chi_pts]

# ---- decompose / sieve at (0.3, 10) ----------------------------------------
z = mp.zeta(mp.mpc(0.3, 10))
w = mp.zeta(mp.mpc(0.7, 10))
fx["decompose_03_10"] = {"zr": s32(z.real), "zi": s32(z.imag),
                         "zr_ref": s32(w.real), "zi_ref": s32(w.imag)}
c = chi(mp.mpc(0.3, 10))
q03, p03 = c.real, c.imag
fx["sieve_03_10"] = {"g1": s32(p03 * z.real + (1 + q03) * z.imag),
                     "g2": s32(p03 * z.imag + (1 - q03) * z.real)}

# ---- critical-line factor table ---------------------------------------------
fx["critline_factors"] = [factors(r) for r in
                          [mp.mpf(v) for v in ["1", "10", "20", "29.9", "30.1", "50", "100"]]]

# ---- half-zero structure ----------------------------------------------------
fx["gram0"] = s32(mp.grampoint(0))
fx["f24_at_z1"] = s32(f24(mp.zetazero(1).imag))

roots24 = []
prev_t, prev_v = None, None
t = mp.mpf(50)
while t <= 57:
    v = f24(t)
    if prev_v is not None and mp.sign(v) != mp.sign(prev_v):
        r = mp.findroot(f24, (prev_t, t), solver="bisect", tol=mp.mpf("1e-30"))
        zz = mp.zeta(mp.mpc(0.5, r))
        kind = "HalfZeroOfZetaR" if abs(zz.real) < abs(zz.imag) else "HalfZeroOfZetaI"
        roots24.append({"rho": s32(r), "kind": kind})
    prev_t, prev_v = t, v
    t += mp.mpf("0.02")
fx["eq24_roots_50_57"] = roots24
fx["eq24_root_near_30"] = s32(find_root(f24, 29.5, 31, "0.02"))

# ---- zeros of zeta on the line ----------------------------------------------
zeros = []
k = 1
while True:
    zk = mp.zetazero(k).imag
    if zk >= 100:
        break
    zeros.append(zk)
    k += 1
fx["zero_counts"] = {"in_10_30": sum(1 for zz in zeros if 10 < zz < 30),
                     "in_10_45": sum(1 for zz in zeros if 10 < zz < 45),
                     "in_10_100": sum(1 for zz in zeros if 10 < zz < 100)}

grams = []
k = 0
while True:
    g = mp.grampoint(k)
    if g > 100:
        break
    if g > 10:
        grams.append(g)
    k += 1
pts = sorted([zz for zz in zeros if zz > 10] + grams)
fx["min_gap_eq30_roots_10_100"] = s32(min(pts[i + 1] - pts[i] for i in range(len(pts) - 1)))

# ---- off-line candidate scan ----------------------------------------------
def L0(rho):
    return rho * mp.tanh(mp.pi * rho) / (2 * mp.pi) - 1

fx["rho_s_main"] = s32(mp.findroot(lambda r: L0(r) - 1 / mp.cosh(mp.pi * r), 6.3))
fx["rho_s_alt"] = s32(mp.findroot(L0, 6.3))
fx["L_0_2"] = s32(L0(mp.mpf(2)))
fx["b_factor"] = [
    dict(sigma=s32(s), rho=s32(r),
         value=s32(mp.log(4 * mp.pi ** 2) - 2 * mp.re(mp.digamma(mp.mpc(s, r)))))
    for (s, r) in [(0.3, 4), (0.3, 8), (0.0, 6.0), (1.0, 7.0)]]

# ---- asymptotic diagnostics ----------------------------------------------------
def asym(rho):
    g = mp.gamma(mp.mpc(0.5, rho))
    rp = rho * LN2PI
    th = mp.tanh(mp.pi * rho / 2)
    rl = rho / 2 * mp.log(mp.mpf(1) / 4 + rho * rho)
    return {"rho": s32(rho),
            "exact": s32(g.imag / g.real),
            "eq25_rhs": s32((th + mp.tan(rp)) / (1 - th * mp.tan(rp))),
            "eq27_approx": s32(-mp.tan(rho - rl)),
            "eq28_tan": s32((-mp.cos(2 * rho) + mp.sin(2 * rl)) /
                            (-mp.sin(2 * rho) + mp.cos(2 * rl)))}

fx["asymptotic"] = [asym(mp.mpf(r)) for r in [2, 30]]

os.makedirs(OUT_DIR, exist_ok=True)
with open(os.path.join(OUT_DIR, "oracle.json"), "w") as f:
    json.dump(fx, f, indent=1)

with open(os.path.join(OUT_DIR, "critical_line_zeros.csv"), "w") as f:
    f.write("index,rho\n")
    for i, zk in enumerate(zeros, start=1):
        f.write(f"{i},{s32(zk)}\n")

print(f"wrote {len(zeros)} zeros and {len(fx)} fixture groups to {os.path.normpath(OUT_DIR)}")
