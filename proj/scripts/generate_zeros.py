#!/usr/bin/env python3
"""Regenerate the bundled zero-ordinate tables.

The first 1000 ordinates come from mpmath.zetazero (arbitrary precision).
The remainder are located with a double-precision Riemann-Siegel evaluator
(corrections C0..C4, Chebyshev-fitted from mpmath Taylor data), bracketed on
a fine grid and refined by vectorized Illinois iteration. Index alignment is
cross-checked against mpmath.zetazero at several checkpoints, so a missed or
duplicated zero aborts the run.

Usage: generate_zeros.py OUT_DIR [--count 100000]
"""

import argparse
import os
import sys

import mpmath
import numpy as np

TWO_PI = 2.0 * np.pi


def psi_taylor_fits(degree=60):
    """Chebyshev fits on p in [0,1] for the Riemann-Siegel terms C0..C4."""
    mpmath.mp.dps = 60
    pi = mpmath.pi

    def psi(p):
        return mpmath.cos(2 * pi * (p * p - p - mpmath.mpf(1) / 16)) / mpmath.cos(2 * pi * p)

    nodes = np.cos(np.pi * (np.arange(degree + 1) + 0.5) / (degree + 1)) * 0.5 + 0.5
    rows = {k: [] for k in range(5)}
    for x in nodes:
        p = mpmath.mpf(float(x))
        # Derivatives via Taylor coefficients; step away from the removable
        # singularities at p = 1/4, 3/4 is unnecessary at this precision.
        d = mpmath.taylor(psi, p, 12)
        der = [d[k] * mpmath.factorial(k) for k in range(13)]
        c0 = der[0]
        c1 = -der[3] / (96 * pi**2)
        c2 = der[2] / (64 * pi**2) + der[6] / (18432 * pi**4)
        c3 = (-der[1] / (64 * pi**2) - der[5] / (3840 * pi**4)
              - der[9] / (5308416 * pi**6))
        c4 = (der[0] / (128 * pi**2) + 19 * der[4] / (24576 * pi**4)
              + 11 * der[8] / (5898240 * pi**6) + der[12] / (2038431744 * pi**8))
        for k, c in enumerate((c0, c1, c2, c3, c4)):
            rows[k].append(float(c))
    fits = []
    for k in range(5):
        fits.append(np.polynomial.chebyshev.Chebyshev.fit(nodes, rows[k], degree, domain=[0, 1]))
    return fits


def theta(t):
    return (t / 2.0 * np.log(t / TWO_PI) - t / 2.0 - np.pi / 8.0
            + 1.0 / (48.0 * t) + 7.0 / (5760.0 * t**3) + 31.0 / (80640.0 * t**5))


class RiemannSiegel:
    def __init__(self):
        self.fits = psi_taylor_fits()

    def z(self, t):
        t = np.asarray(t, dtype=np.float64)
        a = np.sqrt(t / TWO_PI)
        n_terms = np.floor(a).astype(np.int64)
        p = a - n_terms
        th = np.mod(theta(t), TWO_PI)
        nmax = int(n_terms.max())
        total = np.zeros_like(t)
        for n in range(1, nmax + 1):
            mask = n_terms >= n
            arg = th - np.mod(t * np.log(n), TWO_PI)
            total += np.where(mask, np.cos(arg) / np.sqrt(n), 0.0)
        total *= 2.0
        inv_a = 1.0 / a
        corr = np.zeros_like(t)
        pw = np.ones_like(t)
        for k in range(5):
            corr += self.fits[k](p) * pw
            pw = pw * inv_a
        sign = np.where((n_terms - 1) % 2 == 0, 1.0, -1.0)
        return total + sign * corr / np.sqrt(a)


def locate(rs, t_lo, t_hi, step=0.01, chunk=200000):
    grid = np.arange(t_lo, t_hi, step)
    roots = []
    prev_t, prev_z = None, None
    for s in range(0, len(grid), chunk):
        tg = grid[s:s + chunk]
        zg = rs.z(tg)
        if prev_t is not None:
            tg = np.concatenate(([prev_t], tg))
            zg = np.concatenate(([prev_z], zg))
        idx = np.nonzero(np.sign(zg[:-1]) * np.sign(zg[1:]) < 0)[0]
        lo, hi = tg[idx].copy(), tg[idx + 1].copy()
        flo, fhi = zg[idx].copy(), zg[idx + 1].copy()
        for _ in range(60):
            mid = (lo * fhi - hi * flo) / (fhi - flo)
            bad = ~np.isfinite(mid) | (mid <= lo) | (mid >= hi)
            mid = np.where(bad, 0.5 * (lo + hi), mid)
            fm = rs.z(mid)
            left = np.sign(fm) == np.sign(flo)
            lo = np.where(left, mid, lo)
            flo = np.where(left, fm, flo)
            hi = np.where(left, hi, mid)
            fhi = np.where(left, fhi, fm)
            # Illinois damping on the retained endpoint
            fhi = np.where(left, fhi * 0.5, fhi)
            flo = np.where(left, flo, flo * 0.5)
            if np.all(hi - lo < 1e-12):
                break
        roots.append(0.5 * (lo + hi))
        prev_t, prev_z = tg[-1], zg[-1]
        print(f"  scanned to t={tg[-1]:.1f}, roots so far {sum(len(r) for r in roots)}",
              file=sys.stderr)
    return np.concatenate(roots)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("out_dir")
    ap.add_argument("--count", type=int, default=100000)
    ap.add_argument("--exact", type=int, default=1000)
    args = ap.parse_args()

    mpmath.mp.dps = 20
    exact = []
    for n in range(1, args.exact + 1):
        exact.append(float(mpmath.zetazero(n).imag))
        if n % 100 == 0:
            print(f"  mpmath zero {n}", file=sys.stderr)
    exact = np.array(exact)

    rs = RiemannSiegel()
    mpmath.mp.dps = 20
    t_start = 0.5 * (exact[-1] + float(mpmath.zetazero(args.exact + 1).imag))
    t_end = 0.5 * (float(mpmath.zetazero(args.count).imag)
                   + float(mpmath.zetazero(args.count + 1).imag))
    rest = locate(rs, t_start, t_end)
    zeros = np.concatenate((exact, rest))
    if len(zeros) != args.count:
        sys.exit(f"expected {args.count} zeros, located {len(zeros)}")
    if not np.all(np.diff(zeros) > 0):
        sys.exit("located zeros are not strictly increasing")

    checkpoints = sorted({args.exact + 1, 2000, 5000, 6709, 6710, 10000, 25000,
                          50000, 75000, args.count} & set(range(1, args.count + 1)))
    worst = 0.0
    for n in checkpoints:
        ref = float(mpmath.zetazero(n).imag)
        err = abs(ref - zeros[n - 1])
        worst = max(worst, err)
        print(f"  check n={n}: {zeros[n - 1]:.9f} vs {ref:.9f} (err {err:.2e})", file=sys.stderr)
    if worst > 1e-8:
        sys.exit(f"checkpoint mismatch {worst:.2e}")

    os.makedirs(args.out_dir, exist_ok=True)
    with open(os.path.join(args.out_dir, "zeros_1000.txt"), "w") as f:
        for t in zeros[:1000]:
            f.write(f"{t:.9f}\n")
    with open(os.path.join(args.out_dir, f"zeros_{args.count // 1000}k.txt"), "w") as f:
        for t in zeros:
            f.write(f"{t:.9f}\n")


if __name__ == "__main__":
    main()
