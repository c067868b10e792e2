"""Dev harness: settle the short-time structure against the exact release.

Questions:
1. Release sanity: t -> 0+ recovery of the eigenstate, norm conservation,
   independent-oracle (mpmath) agreement of released_values.
2. At fixed outside x and tiny t, is the single-particle modulus envelope
   |sin(a x / 2t)| or |cos(a x / 2t)|?  (Edge-interference sign structure.)
3. Leading-order constants for the pair amplitudes and the Fermion/Boson
   density ratio measured from exact products.
"""
import sys

sys.path.insert(0, "/root/pkg/src")

import mpmath as mp
import numpy as np

from pairstat.grids import Grid1D
from pairstat.states import WavefunctionSample, inner_product, norm
from pairstat.wells import WellSpec, even_mode, released_values, released_state, well_eigenstate

mp.mp.dps = 40

well = WellSpec(0.5)
a = well.a
m1 = even_mode(0, well)   # k = pi
m2 = even_mode(1, well)   # k = 3 pi
print(f"k1={m1.k/np.pi}pi  k2={m2.k/np.pi}pi")


def released_ref(mode, t, x):
    """mpmath high-precision evaluation of the four-term release formula."""
    k = mp.mpf(mode.k)
    aa = mp.mpf(a)
    tt = mp.mpf(t)
    xx = mp.mpf(x)

    def M(xs, ks):
        root_it = mp.sqrt(tt) * mp.exp(1j * mp.pi / 4)
        return mp.mpf("0.5") * mp.exp(1j * (ks * xs - ks**2 * tt)) * mp.erfc(
            (xs - 2 * ks * tt) / (2 * root_it)
        )

    eika = mp.exp(1j * k * aa)
    val = (
        eika * M(xx - aa, k)
        - mp.conj(eika) * M(xx + aa, k)
        + mp.conj(eika) * M(xx - aa, -k)
        - eika * M(xx + aa, -k)
    ) / (2 * mp.sqrt(aa))
    return complex(val)


# --- 1. sanity ---------------------------------------------------------------
for x in (0.13, 0.4, 0.77, 3.0):
    mine = complex(released_values(m2, well, 0.0123, x))
    ref = released_ref(m2, 0.0123, x)
    print(f"released m2 x={x:5.2f}: |mine-ref|={abs(mine-ref):.2e}  |ref|={abs(ref):.3f}")

grid = Grid1D(-40.0, 40.0, 32001)
for t in (1e-6, 1e-3, 0.03, 0.1):
    st = released_state(m1, well, t, grid)
    print(f"norm(t={t:g}) - 1 = {norm(st)-1:+.3e}")

eig = well_eigenstate(m1, well, grid)
tiny = released_state(m1, well, 1e-10, grid)
print("t->0 recovery max|diff| =", np.max(np.abs(tiny.values - eig.values)))

st1 = released_state(m1, well, 0.03, grid)
st2 = released_state(m2, well, 0.03, grid)
print("orthogonality at t=0.03:", abs(inner_product(st1, st2)))

# --- 2. envelope: sin or cos? -------------------------------------------------
print("\nenvelope test at x=5, t=1e-4 (and neighbors):")
C = 4.0 / np.sqrt(np.pi * a)  # common modulus prefactor k t^{3/2} / x^2 scale


def forms(mode, x, t):
    exact = abs(complex(released_values(mode, well, t, x)))
    base = C * mode.k * t**1.5 / x**2
    return exact, base * abs(np.sin(a * x / (2 * t))), base * abs(np.cos(a * x / (2 * t)))


for x in (5.0, 5.001, 5.002, 7.3):
    e, s, c = forms(m1, x, 1e-4)
    print(f"  x={x:６.3f}: exact={e:.6e}  sin-form={s:.6e}  cos-form={c:.6e}")

# ratio statistics over a window: which form tracks the exact modulus?
rng = np.random.default_rng(3)
xs = rng.uniform(4.0, 9.0, 200)
errs_s, errs_c = [], []
for x in xs:
    e, s, c = forms(m1, x, 1e-4)
    if e > 1e-300:
        if s > 0:
            errs_s.append(abs(s / e - 1))
        if c > 0:
            errs_c.append(abs(c / e - 1))
print(f"median |sin-form/exact - 1| = {np.median(errs_s):.3f}")
print(f"median |cos-form/exact - 1| = {np.median(errs_c):.3f}")

# --- 3. pair constants --------------------------------------------------------
print("\npair-amplitude constants (exact products):")
x1, x2 = 3.0, 4.0


def pair_exact(kind, x1, x2, t):
    v11 = complex(released_values(m1, well, t, x1))
    v22 = complex(released_values(m2, well, t, x2))
    v12 = complex(released_values(m1, well, t, x2))
    v21 = complex(released_values(m2, well, t, x1))
    sign = 1.0 if kind == "boson" else -1.0
    return (v11 * v22 + sign * v12 * v21) / np.sqrt(2)


def g1(x, t):
    xm, xp = x - a, x + a
    return x * x * (
        np.exp(1j * xp * xp / (4 * t)) / xp**2 + np.exp(1j * xm * xm / (4 * t)) / xm**2
    )


def g2(x, t):
    xm, xp = x - a, x + a
    return 4 * x**4 * (
        np.exp(1j * xp * xp / (4 * t)) / xp**4 + np.exp(1j * xm * xm / (4 * t)) / xm**4
    )


def f1_paper(x, t):
    xm, xp = x - a, x + a
    return x * x * (
        np.exp(1j * xp * xp / (4 * t)) / xp**2 - np.exp(1j * xm * xm / (4 * t)) / xm**2
    )


k1 = m1.k
s1 = np.sin(m1.k * a)
s2 = np.sin(m2.k * a)
print(f"sin(k1 a)={s1}, sin(k2 a)={s2}")

for t in (1e-3, 3e-4, 1e-4):
    # candidate Boson forms: const/(pi a) * 2^{-1/2} t^3 k1^2 * G1(x1)G1(x2)/(x1 x2)^2
    bos = pair_exact("boson", x1, x2, t)
    form_g = (
        -1j * (24.0 / (np.pi * a)) * s1 * s2 / np.sqrt(2)
        * t**3 * k1**2 * g1(x1, t) * g1(x2, t) / (x1 * x2) ** 2
    )
    form_paper = (
        1j * (384.0 / (np.pi * a)) / np.sqrt(2)
        * t**3 * k1**2
        * np.sin(a * x1 / (2 * t)) * np.sin(a * x2 / (2 * t))
        * np.exp(1j * (x1**2 + x2**2 + 2 * a**2) / (4 * t)) / (x1 * x2) ** 2
    )
    fer = pair_exact("fermion", x1, x2, t)
    form_f = (
        -1j * (96.0 / (np.pi * a)) * s1 * s2 / np.sqrt(2)
        * t**5 * k1**4
        * (g1(x1, t) * g2(x2, t) / x2**2 - g2(x1, t) * g1(x2, t) / x1**2)
        / (x1 * x2) ** 2
    )
    print(f" t={t:g}:")
    print(f"   |B_exact|={abs(bos):.4e} |B_g24|={abs(form_g):.4e} ratio={abs(form_g)/abs(bos):.4f}")
    print(f"   |B_paper384|/|B_exact| = {abs(form_paper)/abs(bos):.4f}")
    print(f"   |F_exact|={abs(fer):.4e} |F_g96|={abs(form_f):.4e} ratio={abs(form_f)/abs(fer):.4f}")
    meas = abs(fer) ** 2 / abs(bos) ** 2
    pred_lit = (2 * t * k1) ** 4 * (1 / x2**2 - 1 / x1**2) ** 2
    print(f"   measured F/B density ratio = {meas:.4e}; literal = {pred_lit:.4e}; meas/literal = {meas/pred_lit:.3f}")
