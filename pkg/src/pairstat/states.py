"""Single-particle samples and two-particle Boson/Fermion combinations.

A pair of distinguishable-orbital wavefunctions psi1, psi2 generates the
symmetrized (Boson) and antisymmetrized (Fermion) two-particle amplitudes

    phi(x1, x2) = [psi1(x1) psi2(x2) +/- psi1(x2) psi2(x1)] / sqrt(2).

The joint density difference |phi_B|^2 - |phi_F|^2 collapses to

    delta(x1, x2) = 2 Re{ psi1(x1) psi2(x2) conj(psi1(x2)) conj(psi2(x1)) },

a rank-one expression in f(x) = psi1(x) conj(psi2(x)).  Everything here is
pure and the sample arrays are read-only; joint 2D matrices are only built
by the explicit *_matrix helpers.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import ConfigurationError
from .grids import Grid1D, integrate_values


class SymmetryClass(enum.Enum):
    EVEN = "even"
    ODD = "odd"
    NONE = "none"


class Statistics(enum.Enum):
    BOSON = "boson"
    FERMION = "fermion"

    @property
    def exchange_sign(self) -> int:
        return 1 if self is Statistics.BOSON else -1


def _freeze(values: np.ndarray) -> np.ndarray:
    out = np.array(values, dtype=np.complex128, copy=True)
    out.flags.writeable = False
    return out


@dataclass(frozen=True)
class WavefunctionSample:
    """Complex wavefunction sampled on a grid at a fixed time."""

    grid: Grid1D
    values: np.ndarray
    time: float

    def __post_init__(self):
        object.__setattr__(self, "values", _freeze(self.values))
        if self.values.shape != (self.grid.n,):
            raise ConfigurationError(
                f"values shape {self.values.shape} does not match grid n={self.grid.n}"
            )
        if not np.all(np.isfinite(self.values.view(np.float64))):
            raise ConfigurationError("wavefunction samples must be finite")
        if self.time < 0:
            raise ConfigurationError("time must be nonnegative")


@dataclass(frozen=True)
class PairState:
    """Two occupied orbitals plus the exchange statistics of the pair."""

    psi1: WavefunctionSample
    psi2: WavefunctionSample
    kind: Statistics

    def __post_init__(self):
        if self.psi1.grid != self.psi2.grid:
            raise ConfigurationError("pair members must share one grid")
        if self.psi1.time != self.psi2.time:
            raise ConfigurationError("pair members must share one time")


def inner_product(
    psi_a: WavefunctionSample,
    psi_b: WavefunctionSample,
    interval: Optional[tuple[float, float]] = None,
) -> complex:
    """Quadrature of psi_a(x) conj(psi_b(x)) over the (snapped) interval.

    Linear in the first argument, conjugate-linear in the second.  None
    integrates over the whole grid.
    """
    if psi_a.grid != psi_b.grid:
        raise ConfigurationError("inner product requires a shared grid")
    return complex(
        integrate_values(psi_a.values * np.conj(psi_b.values), psi_a.grid, interval)
    )


def norm(psi: WavefunctionSample) -> float:
    return float(np.sqrt(max(inner_product(psi, psi).real, 0.0)))


def norm_deficit(psi: WavefunctionSample) -> float:
    """1 - ||psi||^2 over the grid: probability unaccounted for by the window."""
    return 1.0 - inner_product(psi, psi).real


def pair_amplitude(pair: PairState, i1, i2):
    """(Anti)symmetrized amplitude at grid indices (i1, i2); broadcasts."""
    v1, v2 = pair.psi1.values, pair.psi2.values
    sign = pair.kind.exchange_sign
    return (v1[i1] * v2[i2] + sign * v1[i2] * v2[i1]) / np.sqrt(2.0)


def pair_density_matrix(pair: PairState) -> np.ndarray:
    """|phi(x1, x2)|^2 with rows indexing x1 and columns indexing x2."""
    v1, v2 = pair.psi1.values, pair.psi2.values
    direct = np.outer(v1, v2)
    amp = (direct + pair.kind.exchange_sign * direct.T) / np.sqrt(2.0)
    return np.abs(amp) ** 2


def density_difference(psi1: WavefunctionSample, psi2: WavefunctionSample, i1, i2):
    """Boson-minus-Fermion joint density at grid indices (i1, i2); broadcasts."""
    f = psi1.values * np.conj(psi2.values)
    return 2.0 * np.real(f[i1] * np.conj(f[i2]))


def density_difference_matrix(
    psi1: WavefunctionSample, psi2: WavefunctionSample
) -> np.ndarray:
    """delta(x1, x2) on the full grid; rows index x1, columns index x2."""
    f = psi1.values * np.conj(psi2.values)
    return 2.0 * np.real(np.outer(f, np.conj(f)))


def classify_parity(psi: WavefunctionSample, tol: float = 1e-8) -> SymmetryClass:
    """Detect even/odd symmetry about x = 0 by index reversal.

    Residuals are measured relative to max|psi|; the grid must be symmetric
    about the origin for the reversal to mirror x -> -x.
    """
    if not psi.grid.is_symmetric:
        raise ConfigurationError("parity classification needs a symmetric grid")
    v = psi.values
    scale = np.max(np.abs(v))
    if scale == 0.0:
        return SymmetryClass.EVEN
    rev = v[::-1]
    if np.max(np.abs(v - rev)) <= tol * scale:
        return SymmetryClass.EVEN
    if np.max(np.abs(v + rev)) <= tol * scale:
        return SymmetryClass.ODD
    return SymmetryClass.NONE
