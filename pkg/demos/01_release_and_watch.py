"""Release the trap's ground mode and watch the density spread.

The mode starts as a cosine confined to |x| < a.  At t = 0 the walls
vanish; the exact post-release amplitude comes from the four-term shutter
formula, so there is no time stepping and no accumulated error.  The
script prints the density at a few fixed points against time and writes
the full profiles to demos/out/release_even0.csv.
"""
import pathlib

import numpy as np

from pairstat import Grid1D, WellSpec, even_mode, evolve_mode, norm

OUT = pathlib.Path(__file__).parent / "out"


def main():
    well = WellSpec(0.5)
    mode = even_mode(0, well)
    grid = Grid1D(-6.0, 6.0, 1201)
    times = [0.0, 0.01, 0.03, 0.1, 0.3]

    watch = [0.0, 0.5, 1.0, 2.0]
    idx = [grid.index_of(x) for x in watch]
    header = "t      " + "".join(f"|psi({x:+.1f})|^2  " for x in watch) + "norm"
    print(header)
    profiles = {}
    for t in times:
        state = evolve_mode(mode, well, t, grid)
        dens = np.abs(state.values) ** 2
        row = "".join(f"{dens[i]:12.6f} " for i in idx)
        print(f"{t:<6.2f} {row} {norm(state):8.6f}")
        profiles[t] = dens

    OUT.mkdir(exist_ok=True)
    path = OUT / "release_even0.csv"
    with path.open("w") as fh:
        fh.write("x," + ",".join(f"density_t{t}" for t in times) + "\n")
        for i, x in enumerate(grid.x):
            vals = ",".join(f"{profiles[t][i]:.8e}" for t in times)
            fh.write(f"{x:.6f},{vals}\n")
    print(f"\nwrote {path}")
    print("the t = 0.01 row still remembers the box; by t = 0.3 the")
    print("envelope is a single spreading bump with transient ripples")


if __name__ == "__main__":
    main()
