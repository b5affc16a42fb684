#!/usr/bin/env python3
"""Regenerate the Riemann-Siegel correction-term tables in src/zeta_rs_coeffs.cpp.

The Z-function remainder after the main sum has the asymptotic expansion

    Z(t) - 2*sum_{n<=m} n^{-1/2} cos(theta(t) - t log n)
        = (-1)^{m+1} tau^{-1/2} * [ C0(p) + C1(p)/tau + C2(p)/tau^2 + ... ]

with tau = sqrt(t/(2*pi)), m = floor(tau), p = frac(tau).  The coefficient
functions C_j(p) are universal and analytic on [0,1].  Rather than carrying
their closed forms (high derivatives of cos(2pi(p^2-p-1/16))/cos(2pi*p)),
we recover them numerically: for each p on a Chebyshev-root grid, evaluate
the remainder on a ladder of integer m at 50-digit precision and solve for
the coefficients of the 1/tau expansion.  Each C_j is then expressed as a
Chebyshev series in u = 2p-1 and frozen into the C++ source.

Requires mpmath.  Run time is a few minutes; output goes to stdout.
"""

import math
from mpmath import mp, mpf, cos as mcos, log as mlog, sqrt as msqrt

mp.dps = 50

NJ = 5          # coefficients C0..C4 are kept
NJ_FIT = 9      # fit a few extra orders so truncation does not pollute C0..C4
DEGREE = 48     # Chebyshev degree for each C_j
NP = 64         # Chebyshev-root grid size in p
LADDER = [8, 10, 13, 17, 22, 29, 38, 50, 66, 87, 115, 152, 200]


def remainder(p, m):
    tau = mpf(m) + p
    t = 2 * mp.pi * tau * tau
    theta = mp.siegeltheta(t)
    s = mpf(0)
    for n in range(1, m + 1):
        s += mcos(theta - t * mlog(n)) / msqrt(n)
    rem = mp.siegelz(t) - 2 * s
    return rem * (-1) ** (m + 1) * msqrt(tau)


def fit_ladder(p):
    # least squares for [C0..C_{NJ_FIT-1}] from the ladder of m values
    rows = []
    rhs = []
    for m in LADDER:
        tau = mpf(m) + p
        rows.append([tau ** (-j) for j in range(NJ_FIT)])
        rhs.append(remainder(p, m))
    A = mp.matrix(rows)
    b = mp.matrix(rhs)
    return mp.qr_solve(A, b)[0]


def cheb_fit(values):
    # values sampled at Chebyshev roots x_i = cos(pi (i + 1/2) / NP)
    coeffs = []
    for k in range(DEGREE + 1):
        acc = mpf(0)
        for i, v in enumerate(values):
            acc += v * mcos(mp.pi * k * (i + mpf("0.5")) / NP)
        coeffs.append(acc * 2 / NP)
    coeffs[0] /= 2
    return coeffs


def main():
    grid_u = [mcos(mp.pi * (i + mpf("0.5")) / NP) for i in range(NP)]
    grid_p = [(u + 1) / 2 for u in grid_u]

    per_j = [[] for _ in range(NJ)]
    for idx, p in enumerate(grid_p):
        c = fit_ladder(p)
        for j in range(NJ):
            per_j[j].append(c[j])
        print(f"// fitted p-point {idx + 1}/{NP}", flush=True)

    print("// Chebyshev coefficients of C0..C4 in u = 2*frac(sqrt(t/2pi)) - 1.")
    print("// Generated by scripts/gen_rs_coeffs.py; do not edit by hand.")
    for j in range(NJ):
        coeffs = cheb_fit(per_j[j])
        while len(coeffs) > 1 and abs(coeffs[-1]) < mpf("1e-19"):
            coeffs.pop()
        print(f"const double kRsC{j}[] = {{")
        for c in coeffs:
            print(f"    {mp.nstr(c, 17, strip_zeros=False)},")
        print("};")


if __name__ == "__main__":
    main()
