"""Infinite-well eigenstates and their exact free release.

Units: hbar = 2m = 1, so the free equation is i dPsi/dt = -d^2Psi/dx^2 and a
plane wave e^{ikx} moves with velocity 2k.  The trap is the box |x| < a.

Eigenstates at t = 0 (zero outside the box):

    even modes:  psi(x) = a^{-1/2} cos(k x),  k = (2m+1) pi / (2a)
    odd modes:   psi(x) = a^{-1/2} sin(k x),  k = m pi / a

At t = 0 the walls are removed and each mode evolves freely.  Writing the
boxed trig function as plane waves cut off at the two edges reduces the
evolution to four shutter problems, each solved by the Moshinsky function

    M(x, k, t) = (1/2) exp(i k x - i k^2 t) erfc[(x - 2 k t) / (2 sqrt(it))],

the free evolution of theta(-x) e^{ikx}, with sqrt(it) = sqrt(t) e^{i pi/4}.
The cosine modes release as

    Psi(x, t) = (1/2) a^{-1/2} [  e^{ika} M(x-a, k, t) - e^{-ika} M(x+a, k, t)
                                + e^{-ika} M(x-a,-k, t) - e^{ika} M(x+a,-k, t) ]

and the sine modes as the same four shutter terms weighted for
sin = (e^{ikx} - e^{-ikx})/2i:

    Psi(x, t) = (1/2i) a^{-1/2} [  e^{ika} M(x-a, k, t) - e^{-ika} M(x+a, k, t)
                                 - e^{-ika} M(x-a,-k, t) + e^{ika} M(x+a,-k, t) ].

Both reduce to the boxed eigenstate as t -> 0+ and stay normalized.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .errors import ConfigurationError, DomainError
from .faddeeva import erfc_complex
from .grids import Grid1D
from .states import SymmetryClass, WavefunctionSample


@dataclass(frozen=True)
class WellSpec:
    """Half-width a of the trap |x| < a."""

    a: float = 0.5

    def __post_init__(self):
        if not np.isfinite(self.a) or self.a <= 0:
            raise ConfigurationError("well half-width must be positive and finite")


class Parity(enum.Enum):
    EVEN = "even"
    ODD = "odd"

    @property
    def symmetry(self) -> SymmetryClass:
        return SymmetryClass.EVEN if self is Parity.EVEN else SymmetryClass.ODD


@dataclass(frozen=True)
class ModeSpec:
    """Wavenumber and parity of one trap eigenstate."""

    k: float
    parity: Parity

    def __post_init__(self):
        if not np.isfinite(self.k) or self.k <= 0:
            raise ConfigurationError("mode wavenumber must be positive and finite")


def even_mode(index: int, well: WellSpec) -> ModeSpec:
    """Cosine mode number `index` (0-based): k = (2 index + 1) pi / (2a)."""
    if index < 0:
        raise ConfigurationError("even mode index starts at 0")
    return ModeSpec((2 * index + 1) * np.pi / (2.0 * well.a), Parity.EVEN)


def odd_mode(index: int, well: WellSpec) -> ModeSpec:
    """Sine mode number `index` (1-based): k = index pi / a."""
    if index < 1:
        raise ConfigurationError("odd mode index starts at 1")
    return ModeSpec(index * np.pi / well.a, Parity.ODD)


def _check_mode_fits_well(mode: ModeSpec, well: WellSpec) -> None:
    ka = mode.k * well.a
    if mode.parity is Parity.EVEN:
        boundary = abs(np.cos(ka))
    else:
        boundary = abs(np.sin(ka))
    if boundary > 1e-9:
        raise ConfigurationError(
            f"mode k={mode.k} does not vanish at the walls of a={well.a}"
        )


def moshinsky_m(x, k, t):
    """Shutter amplitude M(x, k, t); broadcasts over array arguments.

    Requires t > 0 (the t -> 0+ limit is the sharp step theta(-x) e^{ikx}).
    """
    t_arr = np.asarray(t, dtype=np.float64)
    if np.any(t_arr <= 0) or not np.all(np.isfinite(t_arr)):
        raise DomainError("moshinsky_m requires t > 0")
    x_arr = np.asarray(x, dtype=np.float64)
    k_arr = np.asarray(k, dtype=np.float64)
    if not (np.all(np.isfinite(x_arr)) and np.all(np.isfinite(k_arr))):
        raise DomainError("moshinsky_m requires finite x and k")
    root_it = np.sqrt(t_arr) * np.exp(0.25j * np.pi)
    arg = (x_arr - 2.0 * k_arr * t_arr) / (2.0 * root_it)
    phase = np.exp(1j * (k_arr * x_arr - k_arr**2 * t_arr))
    return 0.5 * phase * erfc_complex(arg)


def eigenstate_values(mode: ModeSpec, well: WellSpec, x) -> np.ndarray:
    """Boxed eigenstate amplitude at positions x (t = 0)."""
    _check_mode_fits_well(mode, well)
    x_arr = np.asarray(x, dtype=np.float64)
    inside = np.abs(x_arr) <= well.a
    if mode.parity is Parity.EVEN:
        profile = np.cos(mode.k * x_arr)
    else:
        profile = np.sin(mode.k * x_arr)
    return np.where(inside, profile, 0.0) / np.sqrt(well.a) + 0.0j


def released_values(mode: ModeSpec, well: WellSpec, t, x) -> np.ndarray:
    """Exact released amplitude at positions x and time(s) t > 0; broadcasts."""
    _check_mode_fits_well(mode, well)
    a, k = well.a, mode.k
    eika = np.exp(1j * k * a)
    terms = (
        eika * moshinsky_m(np.asarray(x) - a, k, t)
        - np.conj(eika) * moshinsky_m(np.asarray(x) + a, k, t)
    )
    mirror = (
        np.conj(eika) * moshinsky_m(np.asarray(x) - a, -k, t)
        - eika * moshinsky_m(np.asarray(x) + a, -k, t)
    )
    if mode.parity is Parity.EVEN:
        return 0.5 / np.sqrt(a) * (terms + mirror)
    return -0.5j / np.sqrt(a) * (terms - mirror)


def well_eigenstate(mode: ModeSpec, well: WellSpec, grid: Grid1D) -> WavefunctionSample:
    """The trapped eigenstate sampled on a grid at t = 0."""
    return WavefunctionSample(grid, eigenstate_values(mode, well, grid.x), 0.0)


def released_state(
    mode: ModeSpec, well: WellSpec, t: float, grid: Grid1D
) -> WavefunctionSample:
    """The released mode sampled on a grid at time t > 0."""
    if t <= 0:
        raise DomainError("released_state requires t > 0; use well_eigenstate at t = 0")
    return WavefunctionSample(grid, released_values(mode, well, t, grid.x), float(t))


def evolve_mode(
    mode: ModeSpec, well: WellSpec, t: float, grid: Grid1D
) -> WavefunctionSample:
    """Eigenstate at t = 0, released state for t > 0."""
    if t < 0:
        raise DomainError("time must be nonnegative")
    if t == 0:
        return well_eigenstate(mode, well, grid)
    return released_state(mode, well, t, grid)
