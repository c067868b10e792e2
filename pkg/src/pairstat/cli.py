"""Command-line scenario runner.

Subcommands:

    evolve       per-time CSV snapshots of the two released modes
    heatmap      joint pair density as CSV matrix + binary graymap
    tdp          region population differences over time + identity report
    asymptotics  short-time scaling fits, ratio table, prefactor audit
    verify       identity suite across both parities and both dispersions

Exit codes: 0 all good, 2 identity failure, 3 configuration error,
4 leakage/truncation over budget.

All configuration is per-flag, with an optional line-oriented key=value
file (--config); flags override the file.  Identical configuration gives
byte-identical output files.
"""
from __future__ import annotations

import argparse
import math
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .asymptotics import (
    AsymptoticRegime,
    density_ratio,
    measured_density_ratio,
    prefactor_audit,
    scaling_exponent_fit,
)
from .errors import ConfigurationError, PairstatError, TruncationError
from .grids import Grid1D
from .output import write_csv, write_json, write_pgm
from .propagator import DispersionRelation, PropagationConfig, propagate
from .regions import population_difference, tdp_regions, verify_identities
from .states import PairState, Statistics, WavefunctionSample, pair_density_matrix
from .wells import ModeSpec, Parity, WellSpec, even_mode, evolve_mode, odd_mode, well_eigenstate

EXIT_OK = 0
EXIT_IDENTITY = 2
EXIT_CONFIG = 3
EXIT_TRUNCATION = 4

# exponent acceptance bands for the lowest even pair
_BOSON_BAND = (6.0, 0.3)
_FERMION_BAND = (10.0, 0.5)

_COMMON_DEFAULTS = {
    "a": 0.5,
    "modes": "same",
    "dispersion": "quadratic",
    "mass": 0.0,
    "engine": "auto",
    "grid_min": -40.0,
    "grid_max": 40.0,
    "grid_n": 2**14,
    "pad": 4,
    "leakage_budget": 1e-5,
    "tol": 1e-5,
    "out_dir": ".",
    "workers": 1,
    "t": None,
    "t_start": None,
    "t_end": None,
    "t_steps": None,
    "kind": "both",
    "map_min": -1.5,
    "map_max": 1.5,
    "map_n": 512,
    "x1": 3.0,
    "x2": 4.0,
}

_SERIES_DEFAULTS = {
    "evolve": (None, None, None, 0.03),
    "heatmap": (None, None, None, 0.03),
    "tdp": (0.0, 0.1, 50, None),
    "asymptotics": (1e-4, 1e-3, None, None),
    "verify": (0.005, 0.1, 12, None),
}

_MAP_N_CAP = 2048


class _Parser(argparse.ArgumentParser):
    """argparse that reports bad usage as a configuration error (exit 3)."""

    def error(self, message):
        raise ConfigurationError(message)


@dataclass(frozen=True)
class ScenarioConfig:
    """Fully resolved run configuration shared by all subcommands."""

    command: str
    well: WellSpec
    mode_label: str
    modes: tuple[ModeSpec, ModeSpec]
    dispersion: DispersionRelation
    engine: str
    grid: Grid1D
    pad: int
    leakage_budget: float
    tol: float
    out_dir: Path
    workers: int
    times: tuple[float, ...]
    kind: str
    map_min: float
    map_max: float
    map_n: int
    x1: float
    x2: float

    def __post_init__(self):
        if len(self.times) == 0:
            raise ConfigurationError("no time samples configured")
        if any(t < 0 or not math.isfinite(t) for t in self.times):
            raise ConfigurationError("time samples must be finite and >= 0")
        if any(b <= a for a, b in zip(self.times, self.times[1:])):
            raise ConfigurationError("time samples must be strictly increasing")
        if self.engine not in ("exact", "spectral", "auto"):
            raise ConfigurationError(f"unknown engine {self.engine!r}")
        if self.engine == "exact" and self.dispersion.tag != "quadratic":
            raise ConfigurationError(
                "the exact shutter engine only covers the quadratic dispersion; "
                "use --engine spectral"
            )
        if self.workers < 1:
            raise ConfigurationError("workers must be >= 1")
        if self.leakage_budget <= 0 or self.tol <= 0:
            raise ConfigurationError("leakage budget and tolerance must be positive")


def _parse_mode_token(token: str, well: WellSpec) -> ModeSpec:
    token = token.strip().lower()
    for prefix, factory, base in (("even", even_mode, 0), ("odd", odd_mode, 1)):
        if token.startswith(prefix):
            tail = token[len(prefix):]
            if not tail.isdigit():
                break
            index = int(tail)
            if index < base:
                raise ConfigurationError(f"{prefix} mode index starts at {base}")
            return factory(index, well)
    raise ConfigurationError(
        f"bad mode token {token!r}: use evenN (N >= 0) or oddN (N >= 1)"
    )


def _resolve_modes(label: str, well: WellSpec) -> tuple[ModeSpec, ModeSpec]:
    label = label.strip().lower()
    if label == "same":
        return even_mode(0, well), even_mode(1, well)
    if label == "opposite":
        return even_mode(1, well), odd_mode(1, well)
    tokens = [tok for tok in label.split(",") if tok.strip()]
    if len(tokens) != 2:
        raise ConfigurationError(
            "--modes must be 'same', 'opposite', or two comma-separated "
            "tokens like even0,odd1"
        )
    first = _parse_mode_token(tokens[0], well)
    second = _parse_mode_token(tokens[1], well)
    if first == second:
        raise ConfigurationError("the pair needs two distinct modes")
    return first, second


def _read_config_file(path: str) -> dict:
    out = {}
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigurationError(f"cannot read config file {path}: {exc}") from exc
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigurationError(f"{path}:{lineno}: expected key=value")
        key, value = line.split("=", 1)
        key = key.strip().replace("-", "_")
        if key not in _COMMON_DEFAULTS:
            raise ConfigurationError(f"{path}:{lineno}: unknown key {key!r}")
        out[key] = value.strip()
    return out


_FLOAT_KEYS = {
    "a", "mass", "grid_min", "grid_max", "leakage_budget", "tol",
    "t_start", "t_end", "map_min", "map_max", "x1", "x2",
}
_INT_KEYS = {"grid_n", "pad", "workers", "t_steps", "map_n"}


def _coerce(key: str, value):
    if value is None or not isinstance(value, str):
        return value
    try:
        if key in _FLOAT_KEYS:
            return float(value)
        if key in _INT_KEYS:
            return int(value)
    except ValueError as exc:
        raise ConfigurationError(f"bad value for {key}: {value!r}") from exc
    return value


def _parse_time_list(text: str) -> tuple[float, ...]:
    try:
        values = tuple(float(tok) for tok in text.split(",") if tok.strip())
    except ValueError as exc:
        raise ConfigurationError(f"bad time list {text!r}") from exc
    if not values:
        raise ConfigurationError("empty time list")
    return values


def _resolve_times(command: str, settings: dict) -> tuple[float, ...]:
    d_start, d_end, d_steps, d_single = _SERIES_DEFAULTS[command]
    t = settings.get("t")
    if t is not None:
        return _parse_time_list(t) if isinstance(t, str) else (float(t),)
    start = settings.get("t_start")
    end = settings.get("t_end")
    steps = settings.get("t_steps")
    if start is None and end is None and steps is None and d_single is not None:
        return (d_single,)
    start = d_start if start is None else float(start)
    end = d_end if end is None else float(end)
    steps = d_steps if steps is None else int(steps)
    if start is None or end is None:
        raise ConfigurationError(f"{command} needs --t or --t-start/--t-end")
    if command == "asymptotics":
        # the window is (start, end); sampling is chosen by the fitter
        if not (0 < start < end):
            raise ConfigurationError("need 0 < t-start < t-end")
        return (start, end)
    if steps is None or steps < 1:
        raise ConfigurationError("t-steps must be >= 1")
    return tuple(float(v) for v in np.linspace(start, end, steps))


def _build_parser() -> _Parser:
    parser = _Parser(prog="pairstat", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_text in (
        ("evolve", "write per-time snapshots of the two released modes"),
        ("heatmap", "write the joint pair density as CSV + graymap"),
        ("tdp", "write region population differences and identity report"),
        ("asymptotics", "fit short-time scaling laws and audit prefactors"),
        ("verify", "run the identity suite over parities and dispersions"),
    ):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--config", help="key=value file; flags override it")
        p.add_argument("--a", type=float, help="trap half-width")
        p.add_argument("--modes", help="same | opposite | evenN,oddM tokens")
        p.add_argument("--dispersion", choices=["quadratic", "relativistic"])
        p.add_argument("--mass", type=float, help="relativistic mass")
        p.add_argument("--engine", choices=["exact", "spectral", "auto"])
        p.add_argument("--t", help="time or comma-separated times")
        p.add_argument("--t-start", type=float, dest="t_start")
        p.add_argument("--t-end", type=float, dest="t_end")
        p.add_argument("--t-steps", type=int, dest="t_steps")
        p.add_argument("--grid-min", type=float, dest="grid_min")
        p.add_argument("--grid-max", type=float, dest="grid_max")
        p.add_argument("--grid-n", type=int, dest="grid_n")
        p.add_argument("--pad", type=int, help="spectral zero-padding factor")
        p.add_argument("--leakage-budget", type=float, dest="leakage_budget")
        p.add_argument("--tol", type=float, help="identity equality tolerance")
        p.add_argument("--out-dir", dest="out_dir")
        p.add_argument("--workers", type=int, help="parallel time samples")
        if name == "heatmap":
            p.add_argument("--kind", choices=["boson", "fermion", "both"])
            p.add_argument("--map-min", type=float, dest="map_min")
            p.add_argument("--map-max", type=float, dest="map_max")
            p.add_argument("--map-n", type=int, dest="map_n")
        if name == "asymptotics":
            p.add_argument("--x1", type=float)
            p.add_argument("--x2", type=float)
    return parser


def _resolve_config(args: argparse.Namespace) -> ScenarioConfig:
    settings = dict(_COMMON_DEFAULTS)
    if getattr(args, "config", None):
        for key, value in _read_config_file(args.config).items():
            settings[key] = value
    for key in _COMMON_DEFAULTS:
        flag = getattr(args, key, None)
        if flag is not None:
            settings[key] = flag
    settings = {k: _coerce(k, v) for k, v in settings.items()}

    well = WellSpec(settings["a"])
    modes = _resolve_modes(str(settings["modes"]), well)
    if settings["dispersion"] == "relativistic":
        dispersion = DispersionRelation.relativistic(settings["mass"])
    else:
        dispersion = DispersionRelation.quadratic()
    grid = Grid1D(settings["grid_min"], settings["grid_max"], settings["grid_n"])
    out_dir = Path(settings["out_dir"])
    times = _resolve_times(args.command, settings)
    return ScenarioConfig(
        command=args.command,
        well=well,
        mode_label=str(settings["modes"]),
        modes=modes,
        dispersion=dispersion,
        engine=str(settings["engine"]),
        grid=grid,
        pad=int(settings["pad"]),
        leakage_budget=float(settings["leakage_budget"]),
        tol=float(settings["tol"]),
        out_dir=out_dir,
        workers=int(settings["workers"]),
        times=times,
        kind=str(settings["kind"]),
        map_min=float(settings["map_min"]),
        map_max=float(settings["map_max"]),
        map_n=int(settings["map_n"]),
        x1=float(settings["x1"]),
        x2=float(settings["x2"]),
    )


def _use_exact(cfg: ScenarioConfig) -> bool:
    if cfg.engine == "exact":
        return True
    if cfg.engine == "spectral":
        return False
    return cfg.dispersion.tag == "quadratic"


def _evolved_pair(
    cfg: ScenarioConfig, t: float, grid: Grid1D | None = None
) -> tuple[WavefunctionSample, WavefunctionSample]:
    grid = cfg.grid if grid is None else grid
    if _use_exact(cfg):
        return tuple(evolve_mode(m, cfg.well, t, grid) for m in cfg.modes)
    pcfg = PropagationConfig(
        zero_padding_factor=cfg.pad, leakage_budget=cfg.leakage_budget
    )
    return tuple(
        propagate(well_eigenstate(m, cfg.well, grid), cfg.dispersion, t, pcfg)
        for m in cfg.modes
    )


def _parallel_ordered(fn, items, workers: int) -> list:
    if workers <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def _meta_common(cfg: ScenarioConfig) -> dict:
    return {
        "a": cfg.well.a,
        "modes": cfg.mode_label,
        "wavenumbers": [m.k for m in cfg.modes],
        "dispersion": cfg.dispersion.tag,
        "mass": cfg.dispersion.mass,
        "engine": "exact" if _use_exact(cfg) else "spectral",
        "grid": {"min": cfg.grid.x_min, "max": cfg.grid.x_max, "n": cfg.grid.n},
        "leakage_budget": cfg.leakage_budget,
    }


def cmd_evolve(cfg: ScenarioConfig) -> int:
    cfg.out_dir.mkdir(parents=True, exist_ok=True)

    def snapshot(item):
        _, t = item
        s1, s2 = _evolved_pair(cfg, t)
        return s1, s2

    states = _parallel_ordered(snapshot, list(enumerate(cfg.times)), cfg.workers)
    x = cfg.grid.x
    for index, (t, (s1, s2)) in enumerate(zip(cfg.times, states)):
        rows = zip(
            x,
            s1.values.real, s1.values.imag,
            s1.values.real**2 + s1.values.imag**2,
            s2.values.real, s2.values.imag,
            s2.values.real**2 + s2.values.imag**2,
        )
        write_csv(
            cfg.out_dir / f"evolve_{index:03d}.csv",
            ["x", "re_mode1", "im_mode1", "density_mode1",
             "re_mode2", "im_mode2", "density_mode2"],
            rows,
        )
    meta = _meta_common(cfg)
    meta["times"] = list(cfg.times)
    meta["files"] = [f"evolve_{i:03d}.csv" for i in range(len(cfg.times))]
    write_json(cfg.out_dir / "evolve_meta.json", meta)
    print(f"wrote {len(cfg.times)} snapshot(s) to {cfg.out_dir}")
    return EXIT_OK


def _heatmap_axes(cfg: ScenarioConfig, t: float):
    """States sampled on the map window for the requested engine."""
    if cfg.map_n > _MAP_N_CAP:
        raise ConfigurationError(f"map resolution over cap ({_MAP_N_CAP})")
    if cfg.map_min >= cfg.map_max:
        raise ConfigurationError("need map-min < map-max")
    if _use_exact(cfg):
        map_grid = Grid1D(cfg.map_min, cfg.map_max, cfg.map_n)
        s1, s2 = _evolved_pair(cfg, t, grid=map_grid)
        return map_grid.x, s1, s2
    s1, s2 = _evolved_pair(cfg, t)
    lo = cfg.grid.index_of(cfg.map_min)
    hi = cfg.grid.index_of(cfg.map_max)
    stride = max(1, int(math.ceil((hi - lo + 1) / cfg.map_n)))
    sel = np.arange(lo, hi + 1, stride)
    sub = Grid1D(float(cfg.grid.x[sel[0]]), float(cfg.grid.x[sel[-1]]), sel.size)
    pick = lambda s: WavefunctionSample(sub, s.values[sel], s.time)
    return cfg.grid.x[sel], pick(s1), pick(s2)


def cmd_heatmap(cfg: ScenarioConfig) -> int:
    cfg.out_dir.mkdir(parents=True, exist_ok=True)
    t = cfg.times[0]
    if len(cfg.times) != 1:
        raise ConfigurationError("heatmap takes exactly one time")
    x, s1, s2 = _heatmap_axes(cfg, t)
    kinds = {
        "boson": (Statistics.BOSON,),
        "fermion": (Statistics.FERMION,),
        "both": (Statistics.BOSON, Statistics.FERMION),
    }.get(cfg.kind)
    if kinds is None:
        raise ConfigurationError(f"unknown kind {cfg.kind!r}")

    meta = _meta_common(cfg)
    meta.update({"t": t, "map": {"min": float(x[0]), "max": float(x[-1]), "n": int(x.size)},
                 "orientation": "rows: x2 ascending downward; columns: x1 ascending"})
    panels = {}
    for kind in kinds:
        density = pair_density_matrix(PairState(s1, s2, kind))
        # file layout: row = x2 (top row = smallest), column = x1
        layout = density.T
        name = kind.name.lower()
        header = ["x2"] + ["%.17g" % v for v in x]
        rows = ([("%.17g" % x2v), *row] for x2v, row in zip(x, layout))
        write_csv(cfg.out_dir / f"heatmap_{name}.csv", header, rows)
        peak = write_pgm(cfg.out_dir / f"heatmap_{name}.pgm", layout)
        panels[name] = {"peak": peak, "csv": f"heatmap_{name}.csv", "pgm": f"heatmap_{name}.pgm"}
    meta["panels"] = panels
    write_json(cfg.out_dir / "heatmap_meta.json", meta)
    print(f"wrote {len(panels)} heatmap panel(s) to {cfg.out_dir}")
    return EXIT_OK


def cmd_tdp(cfg: ScenarioConfig) -> int:
    cfg.out_dir.mkdir(parents=True, exist_ok=True)

    def one(t: float):
        s1, s2 = _evolved_pair(cfg, t)
        report = tdp_regions(s1, s2, cfg.well, leakage_budget=cfg.leakage_budget)
        residuals = verify_identities(
            report,
            tol_equality=cfg.tol,
            tol_zero=1e-2 * cfg.tol,
        )
        return report, residuals

    results = _parallel_ordered(one, cfg.times, cfg.workers)

    series_rows = []
    identity_rows = []
    all_pass = True
    for t, (report, residuals) in zip(cfg.times, results):
        series_rows.append(
            (t, report.delta_a, report.delta_b, report.delta_c, report.delta_d,
             population_difference(report), report.leakage)
        )
        for r in residuals:
            identity_rows.append((t, r.name, r.residual, r.tolerance, r.passed))
            all_pass = all_pass and r.passed
    write_csv(
        cfg.out_dir / "tdp_series.csv",
        ["t", "delta_a", "delta_b", "delta_c", "delta_d",
         "population_difference", "leakage"],
        series_rows,
    )
    write_csv(
        cfg.out_dir / "tdp_identities.csv",
        ["t", "identity", "residual", "tolerance", "passed"],
        identity_rows,
    )
    meta = _meta_common(cfg)
    meta.update({
        "times": list(cfg.times),
        "pairing": results[0][0].pairing.value,
        "tol_equality": cfg.tol,
        "all_identities_pass": all_pass,
    })
    write_json(cfg.out_dir / "tdp_meta.json", meta)
    print(f"tdp series over {len(cfg.times)} time(s): "
          f"{'all identities pass' if all_pass else 'IDENTITY FAILURE'}")
    return EXIT_OK if all_pass else EXIT_IDENTITY


def cmd_asymptotics(cfg: ScenarioConfig) -> int:
    cfg.out_dir.mkdir(parents=True, exist_ok=True)
    t_lo, t_hi = cfg.times[0], cfg.times[-1]
    if t_lo <= 0:
        raise ConfigurationError("asymptotics needs t-start > 0")
    x1, x2, well = cfg.x1, cfg.x2, cfg.well
    regime = AsymptoticRegime(x=min(abs(x1), abs(x2)), t=t_hi, a=well.a)
    if not (regime.time_separation_ok and regime.well_separation_ok):
        raise ConfigurationError(
            "the whole window lies outside the short-time regime "
            f"(x={regime.x}, t_end={t_hi}, a={well.a})"
        )

    import warnings as _warnings
    from .errors import RegimeWarning as _RW

    with _warnings.catch_warnings():
        _warnings.simplefilter("ignore", _RW)
        boson_exp = scaling_exponent_fit(Statistics.BOSON, x1, x2, (t_lo, t_hi), well)
        fermion_exp = scaling_exponent_fit(Statistics.FERMION, x1, x2, (t_lo, t_hi), well)
        ratio_rows = []
        k1 = cfg.modes[0].k
        for t in np.geomspace(t_lo, t_hi, 9):
            measured = measured_density_ratio(x1, x2, float(t), well)
            predicted = density_ratio(x1, x2, float(t), k1)
            ratio_rows.append((float(t), measured, predicted, measured / predicted))
        audit = prefactor_audit(well, x1=x1, x2=x2, t=t_hi)

    boson_ok = abs(boson_exp - _BOSON_BAND[0]) <= _BOSON_BAND[1]
    fermion_ok = abs(fermion_exp - _FERMION_BAND[0]) <= _FERMION_BAND[1]

    rows = [
        ("boson_exponent", boson_exp, _BOSON_BAND[0], _BOSON_BAND[1], boson_ok),
        ("fermion_exponent", fermion_exp, _FERMION_BAND[0], _FERMION_BAND[1], fermion_ok),
    ]
    write_csv(
        cfg.out_dir / "asymptotics_exponents.csv",
        ["quantity", "fitted", "expected", "tolerance", "passed"],
        rows,
    )
    write_csv(
        cfg.out_dir / "asymptotics_ratio.csv",
        ["t", "measured", "predicted", "measured_over_predicted"],
        ratio_rows,
    )
    write_csv(
        cfg.out_dir / "asymptotics_audit.csv",
        ["form", "exact", "predicted", "calibration"],
        [(e.name, e.exact, e.predicted, e.calibration) for e in audit],
    )
    meta = _meta_common(cfg)
    meta.update({
        "window": [t_lo, t_hi],
        "x1": x1,
        "x2": x2,
        "boson_exponent": boson_exp,
        "fermion_exponent": fermion_exp,
        "exponents_pass": bool(boson_ok and fermion_ok),
        "regime": {
            "time_separation_ok": regime.time_separation_ok,
            "well_separation_ok": regime.well_separation_ok,
            "far_field_ok": regime.far_field_ok,
            "borderline": regime.borderline,
        },
    })
    write_json(cfg.out_dir / "asymptotics_meta.json", meta)
    print(f"exponents: boson {boson_exp:.3f}, fermion {fermion_exp:.3f} "
          f"({'pass' if boson_ok and fermion_ok else 'FAIL'}); "
          "ratio and audit columns are informational")
    return EXIT_OK if boson_ok and fermion_ok else EXIT_IDENTITY


def cmd_verify(cfg: ScenarioConfig) -> int:
    cfg.out_dir.mkdir(parents=True, exist_ok=True)
    dispersions = [
        DispersionRelation.quadratic(),
        DispersionRelation.relativistic(cfg.dispersion.mass),
    ]
    cells = [
        (pairing, dispersion)
        for pairing in ("same", "opposite")
        for dispersion in dispersions
    ]

    def run_cell(cell):
        pairing, dispersion = cell
        modes = _resolve_modes(pairing, cfg.well)
        engine = "auto" if dispersion.tag == "quadratic" else "spectral"
        sub = ScenarioConfig(
            command="verify", well=cfg.well, mode_label=pairing, modes=modes,
            dispersion=dispersion, engine=engine, grid=cfg.grid, pad=cfg.pad,
            leakage_budget=cfg.leakage_budget, tol=cfg.tol, out_dir=cfg.out_dir,
            workers=1, times=cfg.times, kind=cfg.kind, map_min=cfg.map_min,
            map_max=cfg.map_max, map_n=cfg.map_n, x1=cfg.x1, x2=cfg.x2,
        )
        rows = []
        for t in cfg.times:
            s1, s2 = _evolved_pair(sub, t)
            report = tdp_regions(s1, s2, cfg.well, leakage_budget=cfg.leakage_budget)
            for r in verify_identities(
                report, tol_equality=cfg.tol, tol_zero=1e-2 * cfg.tol
            ):
                rows.append(
                    (pairing, dispersion.tag, dispersion.mass, t,
                     r.name, r.residual, r.tolerance, r.passed)
                )
        return rows

    all_rows = []
    for rows in _parallel_ordered(run_cell, cells, cfg.workers):
        all_rows.extend(rows)
    all_pass = all(row[-1] for row in all_rows)
    write_csv(
        cfg.out_dir / "verify_report.csv",
        ["pairing", "dispersion", "mass", "t",
         "identity", "residual", "tolerance", "passed"],
        all_rows,
    )
    meta = _meta_common(cfg)
    meta.update({
        "times": list(cfg.times),
        "mass": cfg.dispersion.mass,
        "cells": [f"{p}/{d.tag}" for p, d in cells],
        "all_identities_pass": all_pass,
    })
    write_json(cfg.out_dir / "verify_meta.json", meta)
    print("verify: " + ("all identities pass" if all_pass else "IDENTITY FAILURE"))
    return EXIT_OK if all_pass else EXIT_IDENTITY


_COMMANDS = {
    "evolve": cmd_evolve,
    "heatmap": cmd_heatmap,
    "tdp": cmd_tdp,
    "asymptotics": cmd_asymptotics,
    "verify": cmd_verify,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        cfg = _resolve_config(args)
        return _COMMANDS[cfg.command](cfg)
    except ConfigurationError as exc:
        print(f"pairstat: configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except TruncationError as exc:
        print(f"pairstat: {exc}", file=sys.stderr)
        return EXIT_TRUNCATION
    except PairstatError as exc:
        print(f"pairstat: error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
