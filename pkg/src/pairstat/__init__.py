"""Boson/Fermion pairs released from a 1D trap.

Exact shutter dynamics, spectral propagation under pluggable dispersion
laws, escape-scenario population bookkeeping, and short-time scaling.
"""

from .asymptotics import (
    AsymptoticRegime,
    PrefactorAudit,
    density_ratio,
    envelope_exponent,
    f1,
    f2,
    measured_density_ratio,
    prefactor_audit,
    scaling_exponent_fit,
    short_time_pair,
    short_time_single,
    single_mode_exponent,
)
from .errors import (
    ConfigurationError,
    DomainError,
    InsufficientDataError,
    PairstatError,
    RegimeWarning,
    SingularityError,
    TruncationError,
)
from .faddeeva import erfc_complex, faddeeva_w
from .grids import Grid1D, integrate_values, simpson_weights, snap_interval
from .propagator import DispersionRelation, PropagationConfig, propagate
from .regions import (
    IdentityResidual,
    RegionLabel,
    SymmetryPairing,
    TdpReport,
    half_line_overlap,
    population_difference,
    region_rectangles,
    tdp_rectangle,
    tdp_regions,
    verify_identities,
)
from .states import (
    PairState,
    Statistics,
    SymmetryClass,
    WavefunctionSample,
    classify_parity,
    density_difference,
    density_difference_matrix,
    inner_product,
    norm,
    norm_deficit,
    pair_amplitude,
    pair_density_matrix,
)
from .wells import (
    ModeSpec,
    Parity,
    WellSpec,
    eigenstate_values,
    even_mode,
    evolve_mode,
    moshinsky_m,
    odd_mode,
    released_state,
    released_values,
    well_eigenstate,
)

__version__ = "0.1.0"

__all__ = [
    "AsymptoticRegime",
    "PrefactorAudit",
    "density_ratio",
    "envelope_exponent",
    "f1",
    "f2",
    "measured_density_ratio",
    "prefactor_audit",
    "scaling_exponent_fit",
    "short_time_pair",
    "short_time_single",
    "single_mode_exponent",
    "ConfigurationError",
    "DomainError",
    "InsufficientDataError",
    "PairstatError",
    "RegimeWarning",
    "SingularityError",
    "TruncationError",
    "erfc_complex",
    "faddeeva_w",
    "Grid1D",
    "integrate_values",
    "simpson_weights",
    "snap_interval",
    "DispersionRelation",
    "PropagationConfig",
    "propagate",
    "IdentityResidual",
    "RegionLabel",
    "SymmetryPairing",
    "TdpReport",
    "half_line_overlap",
    "population_difference",
    "region_rectangles",
    "tdp_rectangle",
    "tdp_regions",
    "verify_identities",
    "PairState",
    "Statistics",
    "SymmetryClass",
    "WavefunctionSample",
    "classify_parity",
    "density_difference",
    "density_difference_matrix",
    "inner_product",
    "norm",
    "norm_deficit",
    "pair_amplitude",
    "pair_density_matrix",
    "ModeSpec",
    "Parity",
    "WellSpec",
    "eigenstate_values",
    "even_mode",
    "evolve_mode",
    "moshinsky_m",
    "odd_mode",
    "released_state",
    "released_values",
    "well_eigenstate",
    "__version__",
]
