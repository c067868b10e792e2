"""Acceptance suite: the eight headline guarantees, one test per criterion.

Every protocol detail (grid, time samples, budgets, tolerances) is frozen
in this file so reruns are comparable.  Criteria 1-2 and 5 carry explicit
runtime ceilings.  Criterion 5's closed-form ratio clause states exactly
what it compares; its failure message reports the measured quotients.
"""
import math
import shutil
import subprocess
import sys
import time

import mpmath as mp
import numpy as np
import pytest

from pairstat import (
    DispersionRelation,
    Grid1D,
    PropagationConfig,
    RegionLabel,
    Statistics,
    WavefunctionSample,
    density_difference_matrix,
    density_ratio,
    even_mode,
    evolve_mode,
    faddeeva_w,
    inner_product,
    integrate_values,
    measured_density_ratio,
    norm,
    odd_mode,
    propagate,
    region_rectangles,
    released_state,
    scaling_exponent_fit,
    tdp_rectangle,
    tdp_regions,
    well_eigenstate,
)

mp.mp.dps = 40


# wide window, odd count: 0 and +-a on nodes, mirror-symmetric weights
def identity_grid():
    return Grid1D(-100.0, 100.0, 40001)


def test_criterion_1_same_parity_identity_suite(well):
    """Region identities for the lowest even pair at 50 release times."""
    start = time.monotonic()
    grid = identity_grid()
    m1, m2 = even_mode(0, well), even_mode(1, well)
    for t in np.linspace(0.002, 0.1, 50):
        t = float(t)
        s1 = evolve_mode(m1, well, t, grid)
        s2 = evolve_mode(m2, well, t, grid)
        r = tdp_regions(s1, s2, well, leakage_budget=1e-5)
        assert abs(r.total) < 1e-8, f"sum at t={t}: {r.total:.3e}"
        assert r.delta_a >= -1e-10, f"delta_A at t={t}: {r.delta_a:.3e}"
        assert r.delta_b >= -1e-10, f"delta_B at t={t}: {r.delta_b:.3e}"
        assert abs(r.delta_d - r.delta_b) < 1e-6, f"D=B at t={t}"
        assert abs(r.delta_a - (r.delta_b + r.delta_d)) < 1e-6, f"A=B+D at t={t}"
        assert abs(r.delta_c + 2.0 * r.delta_a) < 1e-6, f"C=-2A at t={t}"
        if t >= 0.005:
            assert r.delta_a > 0.0, f"delta_A not positive at t={t}"
    assert time.monotonic() - start < 60.0


def test_criterion_2_opposite_parity_identity_suite(well):
    """Vanishing A and C for an even+odd pair, plus the pointwise flip."""
    start = time.monotonic()
    grid = identity_grid()
    m1, m2 = even_mode(1, well), odd_mode(1, well)
    for t in np.linspace(0.002, 0.1, 50):
        t = float(t)
        s1 = evolve_mode(m1, well, t, grid)
        s2 = evolve_mode(m2, well, t, grid)
        r = tdp_regions(s1, s2, well, leakage_budget=1e-5)
        assert abs(r.delta_a) < 1e-8, f"delta_A at t={t}: {r.delta_a:.3e}"
        assert abs(r.delta_c) < 1e-8, f"delta_C at t={t}: {r.delta_c:.3e}"
        assert abs(r.delta_d + r.delta_b) < 1e-6, f"D=-B at t={t}"

    # 256^2 probe of delta(x2, -x1) = -delta(x1, x2); the probe grid is
    # mirror-symmetric as a point set, so reversing one axis lands on nodes
    probe = Grid1D(-2.0, 2.0, 256)
    p1 = evolve_mode(m1, well, 0.03, probe)
    p2 = evolve_mode(m2, well, 0.03, probe)
    d = density_difference_matrix(p1, p2)
    flip = float(np.max(np.abs(d[:, ::-1].T + d)))
    assert flip < 1e-10, f"pointwise flip residual {flip:.3e}"
    assert time.monotonic() - start < 60.0


def local_simpson_weights(count, dx):
    # independent composite rule; oracle segments always give odd counts
    assert count % 2 == 1 and count >= 3
    w = np.ones(count)
    w[1:-1:2] = 4.0
    w[2:-1:2] = 2.0
    return w * dx / 3.0


def oracle_rectangle(psi1, psi2, r1, r2):
    """2D quadrature of the boson-minus-fermion density over r1 x r2.

    Builds both symmetrized densities pointwise and integrates with its
    own tensor-product weights; nothing of the factorized overlap path is
    reused, so agreement also pins the overall constant.
    """
    grid = psi1.grid
    v1, v2 = psi1.values, psi2.values

    def segment(interval):
        lo = grid.index_of(interval[0])
        hi = grid.index_of(interval[1])
        if hi - lo + 1 < 3:
            return None
        if (hi - lo + 1) % 2 == 0:
            hi -= 1
        return lo, hi, local_simpson_weights(hi - lo + 1, grid.dx)

    seg1, seg2 = segment(r1), segment(r2)
    if seg1 is None or seg2 is None:
        return 0.0
    (l1, h1, w1), (l2, h2, w2) = seg1, seg2
    a1, b1 = v1[l1 : h1 + 1], v2[l1 : h1 + 1]
    a2, b2 = v1[l2 : h2 + 1], v2[l2 : h2 + 1]
    direct = np.outer(a1, b2)
    swapped = np.outer(b1, a2)
    boson = np.abs((direct + swapped) / math.sqrt(2.0)) ** 2
    fermion = np.abs((direct - swapped) / math.sqrt(2.0)) ** 2
    return float(w1 @ (boson - fermion) @ w2)


def random_smooth_state(grid, gen):
    x = grid.x
    v = np.zeros(grid.n, dtype=complex)
    for _ in range(3):
        c = gen.uniform(-2.0, 2.0)
        s = gen.uniform(0.4, 1.5)
        k = gen.uniform(-4.0, 4.0)
        amp = gen.uniform(0.2, 1.0) * np.exp(1j * gen.uniform(0, 2 * np.pi))
        v += amp * np.exp(-((x - c) ** 2) / (2 * s * s) + 1j * k * x)
    v /= math.sqrt(np.sum(np.abs(v) ** 2) * grid.dx)
    return WavefunctionSample(grid, v, 0.0)


def test_criterion_3_factorized_matches_2d_oracle(well, rng):
    """Region populations agree with brute-force 2D quadrature to 1e-7."""
    grid = Grid1D(-8.0, 8.0, 2001)

    def region_pair(s1, s2, label):
        rects = region_rectangles(label, well.a)
        fact = sum(tdp_rectangle(s1, s2, r1, r2) for r1, r2 in rects)
        direct = sum(oracle_rectangle(s1, s2, r1, r2) for r1, r2 in rects)
        return fact, direct

    for i in range(20):
        s1 = random_smooth_state(grid, rng)
        s2 = random_smooth_state(grid, rng)
        for label in RegionLabel:
            fact, direct = region_pair(s1, s2, label)
            assert fact == pytest.approx(direct, abs=1e-7), (i, label)

    # the physical pairs, exact shutter evolution; the report path must
    # reproduce the per-rectangle sums it is built from
    for modes in ((even_mode(0, well), even_mode(1, well)),
                  (even_mode(1, well), odd_mode(1, well))):
        s1 = evolve_mode(modes[0], well, 0.03, grid)
        s2 = evolve_mode(modes[1], well, 0.03, grid)
        report = tdp_regions(s1, s2, well, leakage_budget=1e-4)
        for label in RegionLabel:
            fact, direct = region_pair(s1, s2, label)
            assert fact == pytest.approx(direct, abs=1e-7), label
            assert report.delta(label) == pytest.approx(fact, abs=1e-12), label


def test_criterion_4_exact_vs_spectral(well):
    """Shutter formula and spectral propagator agree; evolution is unitary.

    The mismatch is measured as the integrated squared modulus of the
    difference, the probability carried by it.  The pointwise difference
    floor is set by the periodic padded domain: the free halo spreads at
    unbounded speed, wraps, and re-enters at amplitude ~ (2L)^-2, so the
    probability scale is the stable thing to pin.
    """
    grid = Grid1D(-80.0, 80.0, 2**17 + 1)
    cfg = PropagationConfig(zero_padding_factor=4, leakage_budget=1e-5)
    disp = DispersionRelation.quadratic()
    modes = [even_mode(0, well), even_mode(1, well), odd_mode(1, well)]
    for t in (0.01, 0.03, 0.1):
        spectral = [propagate(well_eigenstate(m, well, grid), disp, t, cfg) for m in modes]
        exact = [released_state(m, well, t, grid) for m in modes]
        for m, s, e in zip(modes, spectral, exact):
            mismatch = float(integrate_values(np.abs(s.values - e.values) ** 2, grid))
            assert mismatch < 1e-6, f"{m} t={t}: mismatch {mismatch:.3e}"
            assert abs(norm(s) - 1.0) < 1e-6, f"{m} t={t}: spectral norm"
            assert abs(norm(e) - 1.0) < 1e-6, f"{m} t={t}: exact norm"
        for i in range(3):
            for j in range(i + 1, 3):
                ov = abs(inner_product(spectral[i], spectral[j]))
                assert ov < 1e-6, f"overlap {i},{j} at t={t}: {ov:.3e}"


@pytest.mark.filterwarnings("ignore::pairstat.RegimeWarning")
def test_criterion_5_short_time_scaling(well):
    """Envelope exponents 6 and 10, then the closed-form ratio clause.

    The final clause asks the measured Fermion/Boson density ratio at
    (x1, x2) = (3, 4) to track (2 t k1)^4 (1/x2^2 - 1/x1^2)^2 within a
    factor 1.25 across t in [1e-4, 1e-3].  That closed form keeps only
    the leading edge terms; at x/a = 6..8 the quartic corrections do not
    cancel between numerator and denominator, so the measured quotient
    sits two orders of magnitude above 1.  The exponent clauses pass;
    this clause is expected to fail and the message carries the numbers.
    """
    start = time.monotonic()
    b_exp = scaling_exponent_fit(Statistics.BOSON, 3.0, 4.0, (1e-4, 1e-3), well)
    f_exp = scaling_exponent_fit(Statistics.FERMION, 3.0, 4.0, (1e-4, 1e-3), well)
    assert abs(b_exp - 6.0) < 0.3, f"boson envelope exponent {b_exp:.3f}"
    assert abs(f_exp - 10.0) < 0.5, f"fermion envelope exponent {f_exp:.3f}"

    k1 = even_mode(0, well).k
    quotients = []
    for t in np.geomspace(1e-4, 1e-3, 9):
        t = float(t)
        q = measured_density_ratio(3.0, 4.0, t, well) / density_ratio(3.0, 4.0, t, k1)
        quotients.append(q)
    worst = max(max(q, 1.0 / q) for q in quotients)
    elapsed = time.monotonic() - start
    assert elapsed < 300.0
    assert worst <= 1.25, (
        f"exponents pass (boson {b_exp:.3f}, fermion {f_exp:.3f}) but the "
        f"measured/closed-form ratio quotient spans "
        f"[{min(quotients):.1f}, {max(quotients):.1f}] over t in [1e-4, 1e-3]; "
        f"the leading-edge closed form drops quartic corrections that do not "
        f"cancel in the ratio at x/a = 6..8, so the x1.25 window is out of "
        f"reach at these coordinates (see prefactor_audit for the "
        f"term-by-term calibration)"
    )


def test_criterion_6_dispersion_genericity(well):
    """Sign and zero identities survive a change of dispersion law."""
    grid = Grid1D(-40.0, 40.0, 2**14)
    cfg = PropagationConfig(zero_padding_factor=4, leakage_budget=1e-5)
    same = (even_mode(0, well), even_mode(1, well))
    opposite = (even_mode(1, well), odd_mode(1, well))
    probe = Grid1D(-2.0, 2.0, 256)
    for mass in (0.0, 1.0, 10.0):
        disp = DispersionRelation.relativistic(mass)
        for t in np.linspace(0.005, 0.1, 8):
            t = float(t)
            ctx = f"mass={mass} t={t}"
            s1 = propagate(well_eigenstate(same[0], well, grid), disp, t, cfg)
            s2 = propagate(well_eigenstate(same[1], well, grid), disp, t, cfg)
            r = tdp_regions(s1, s2, well, leakage_budget=1e-5)
            assert abs(r.total) < 1e-8, f"sum {ctx}: {r.total:.3e}"
            assert r.delta_a >= -1e-10, f"delta_A {ctx}"
            assert r.delta_b >= -1e-10, f"delta_B {ctx}"
            assert abs(r.delta_d - r.delta_b) < 1e-6, f"D=B {ctx}"
            assert abs(r.delta_a - (r.delta_b + r.delta_d)) < 1e-6, f"A=B+D {ctx}"
            assert abs(r.delta_c + 2.0 * r.delta_a) < 1e-6, f"C=-2A {ctx}"
            assert r.delta_a > 0.0, f"delta_A not positive {ctx}"

            o1 = propagate(well_eigenstate(opposite[0], well, grid), disp, t, cfg)
            o2 = propagate(well_eigenstate(opposite[1], well, grid), disp, t, cfg)
            ro = tdp_regions(o1, o2, well, leakage_budget=1e-5)
            assert abs(ro.delta_a) < 1e-8, f"delta_A {ctx}: {ro.delta_a:.3e}"
            assert abs(ro.delta_c) < 1e-8, f"delta_C {ctx}: {ro.delta_c:.3e}"
            assert abs(ro.delta_d + ro.delta_b) < 1e-6, f"D=-B {ctx}"

        p1 = propagate(well_eigenstate(opposite[0], well, probe), disp, 0.03, cfg)
        p2 = propagate(well_eigenstate(opposite[1], well, probe), disp, 0.03, cfg)
        d = density_difference_matrix(p1, p2)
        flip = float(np.max(np.abs(d[:, ::-1].T + d)))
        assert flip < 1e-10, f"pointwise flip at mass={mass}: {flip:.3e}"


def w_reference(z: complex) -> complex:
    zz = mp.mpc(z)
    return complex(mp.exp(-zz * zz) * mp.erfc(-1j * zz))


def reference_points(count: int = 1000) -> np.ndarray:
    # lower half-plane points with y^2 - x^2 > 600 overflow a double and
    # are skipped; the generator seed freezes the set
    gen = np.random.default_rng(918273645)
    points = []
    while len(points) < count:
        r = 10.0 ** gen.uniform(-3.0, 3.0)
        theta = gen.uniform(0.0, 2.0 * math.pi)
        z = r * complex(math.cos(theta), math.sin(theta))
        if z.imag < 0 and z.imag**2 - z.real**2 > 600.0:
            continue
        points.append(z)
    return np.array(points)


def test_criterion_7_faddeeva_accuracy():
    """w(z) against the high-precision oracle on the frozen 1000-point set."""
    pts = reference_points()
    assert np.any((pts.real > 0) & (pts.imag > 0))
    assert np.any((pts.real < 0) & (pts.imag > 0))
    assert np.any((pts.real < 0) & (pts.imag < 0))
    assert np.any((pts.real > 0) & (pts.imag < 0))
    vals = faddeeva_w(pts)
    worst = 0.0
    for z, v in zip(pts, vals):
        ref = w_reference(complex(z))
        worst = max(worst, abs(v - ref) / abs(ref))
    assert worst < 1e-10, f"worst relative error {worst:.3e}"


def test_criterion_8_verify_determinism(tmp_path):
    """Two verify runs with identical flags emit byte-identical reports."""
    exe = shutil.which("pairstat")
    cmd = [exe] if exe else [sys.executable, "-m", "pairstat"]
    out = tmp_path / "ver"
    args = cmd + ["verify", "--t-steps", "4", "--mass", "1.0", "--out-dir", str(out)]

    def run_once():
        proc = subprocess.run(args, capture_output=True, text=True)
        assert proc.returncode == 0, proc.stdout + proc.stderr
        return {
            name: (out / name).read_bytes()
            for name in ("verify_report.csv", "verify_meta.json")
        }

    first = run_once()
    second = run_once()
    assert first == second
