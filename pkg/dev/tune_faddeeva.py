"""Dev harness: measure faddeeva_w accuracy against mpmath on a stress grid."""
import sys

sys.path.insert(0, "/root/pkg/src")

import mpmath as mp
import numpy as np

from pairstat.faddeeva import faddeeva_w, _w_series, _w_weideman, _w_continued_fraction

mp.mp.dps = 30


def w_ref(z):
    zm = mp.mpc(z)
    return complex(mp.exp(-zm * zm) * mp.erfc(-1j * zm))


def stress_points(n, seed=7):
    rng = np.random.default_rng(seed)
    pts = []
    while len(pts) < n:
        r = 10.0 ** rng.uniform(-3, 3)
        th = rng.uniform(-np.pi, np.pi)
        z = r * np.exp(1j * th)
        # keep |w| representable: lower half-plane blowup ~ exp(y^2 - x^2)
        if z.imag < 0 and (z.imag**2 - z.real**2) > 600.0:
            continue
        pts.append(z)
    return np.array(pts)


def report(tag, z, w_hat):
    ref = np.array([w_ref(v) for v in z])
    ok = np.isfinite(w_hat) & (np.abs(ref) > 0)
    rel = np.abs(w_hat[ok] - ref[ok]) / np.abs(ref[ok])
    i = np.argmax(rel)
    print(f"{tag:28s} n={ok.sum():5d} max_rel={rel.max():.3e} "
          f"at z={z[ok][i]:.6g} p99={np.quantile(rel, 0.99):.3e}")
    return rel.max()


z = stress_points(4000)
report("full stress set", z, faddeeva_w(z))

# Per-branch checks in the upper half-plane
rng = np.random.default_rng(11)
for lo, hi, fn, tag in [
    (1e-3, 2.5, _w_series, "series |z|<=2.5"),
    (2.5, 7.0, _w_weideman, "weideman 2.5..7"),
    (7.0, 1e3, _w_continued_fraction, "cont.frac >7"),
]:
    r = np.exp(rng.uniform(np.log(lo), np.log(hi), 800))
    th = rng.uniform(0, np.pi, 800)
    zz = r * np.exp(1j * th)
    report(tag, zz, fn(zz))

# Overlap annuli: adjacent branches must agree
for lo, hi, fa, fb, tag in [
    (2.2, 2.8, _w_series, _w_weideman, "overlap series/weideman"),
    (6.0, 8.0, _w_weideman, _w_continued_fraction, "overlap weideman/cf"),
]:
    r = np.exp(rng.uniform(np.log(lo), np.log(hi), 500))
    th = rng.uniform(0, np.pi, 500)
    zz = r * np.exp(1j * th)
    wa, wb = fa(zz), fb(zz)
    d = np.abs(wa - wb) / np.abs(wb)
    print(f"{tag:28s} max_branch_disagreement={d.max():.3e}")

# Axes (hardest lines)
x = np.exp(rng.uniform(np.log(1e-3), np.log(1e3), 600))
report("positive real axis", x.astype(complex), faddeeva_w(x.astype(complex)))
y = np.exp(rng.uniform(np.log(1e-3), np.log(25.0), 400))
report("positive imag axis", (1j * y), faddeeva_w(1j * y))
