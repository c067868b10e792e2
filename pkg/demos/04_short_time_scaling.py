"""How fast does probability first arrive far from the trap?

Right after release the joint density at a distant point (x1, x2) grows
as a power of t, and the power remembers the statistics: the Boson pair
arrives at order t^6 while the Fermion pair, whose leading terms cancel
under antisymmetrization, is delayed to t^10.  The script fits both
exponents from the exact dynamics, then puts the textbook closed-form
ratio next to the measured one to show how rough the leading-edge
approximation is at moderate distances.
"""
import warnings

import numpy as np

from pairstat import (
    RegimeWarning,
    Statistics,
    WellSpec,
    density_ratio,
    even_mode,
    measured_density_ratio,
    prefactor_audit,
    scaling_exponent_fit,
)

WELL = WellSpec(0.5)
X1, X2 = 3.0, 4.0
WINDOW = (1e-4, 1e-3)


def main():
    warnings.simplefilter("ignore", RegimeWarning)
    b = scaling_exponent_fit(Statistics.BOSON, X1, X2, WINDOW, WELL)
    f = scaling_exponent_fit(Statistics.FERMION, X1, X2, WINDOW, WELL)
    print(f"envelope exponent at (x1, x2) = ({X1}, {X2}), t in [1e-4, 1e-3]:")
    print(f"  boson   {b:6.3f}   (expected 6)")
    print(f"  fermion {f:6.3f}   (expected 10)")

    k1 = even_mode(0, WELL).k
    print("\nFermion/Boson density ratio, measured vs closed form:")
    print("t          measured      closed form   quotient")
    for t in np.geomspace(*WINDOW, 7):
        t = float(t)
        meas = measured_density_ratio(X1, X2, t, WELL)
        pred = density_ratio(X1, X2, t, k1)
        print(f"{t:<10.2e} {meas:<13.4e} {pred:<13.4e} {meas / pred:8.1f}")
    print("the quotient is far from 1: the closed form keeps only the")
    print("leading edge terms, and their quartic corrections do not cancel")
    print("in the ratio at x/a = 6..8")

    print("\nterm-by-term calibration against the exact amplitudes:")
    for entry in prefactor_audit(WELL, X1, X2, 1e-3):
        print(f"  {entry.name:24s} {entry.calibration:12.6f}")
    print("the single-mode and pair constants calibrate to 1; only the")
    print("far-field ratio formula carries the big geometric shortfall")


if __name__ == "__main__":
    main()
