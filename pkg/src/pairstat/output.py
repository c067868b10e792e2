"""Deterministic file emission: CSV tables, binary graymaps, JSON sidecars.

Floats are printed with 17 significant digits so every double round-trips
exactly; identical inputs produce byte-identical files (LF newlines, sorted
JSON keys, no timestamps).
"""
from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .errors import ConfigurationError

__all__ = ["format_value", "write_csv", "write_pgm", "write_json"]


def format_value(v) -> str:
    """One CSV cell: %.17g for real floats, str() for everything else."""
    if isinstance(v, (bool, np.bool_)):
        return "true" if v else "false"
    if isinstance(v, (float, np.floating)):
        return "%.17g" % float(v)
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    return str(v)


def write_csv(path, header, rows) -> None:
    """Comma-separated table with a header row and LF newlines."""
    path = Path(path)
    with path.open("w", encoding="ascii", newline="\n") as fh:
        fh.write(",".join(str(h) for h in header) + "\n")
        for row in rows:
            fh.write(",".join(format_value(v) for v in row) + "\n")


def write_pgm(path, matrix, peak: float | None = None) -> float:
    """Binary 8-bit graymap of a nonnegative matrix.

    matrix[row, col] is emitted row-major, top row first, so the caller's
    row axis runs downward in the image.  Gray levels map [0, peak]
    linearly to [0, 255]; peak defaults to the matrix maximum and is
    returned so it can be recorded in a sidecar.
    """
    m = np.asarray(matrix, dtype=np.float64)
    if m.ndim != 2:
        raise ConfigurationError("graymap needs a 2D matrix")
    if not np.all(np.isfinite(m)) or np.any(m < 0):
        raise ConfigurationError("graymap values must be finite and nonnegative")
    if peak is None:
        peak = float(m.max())
    if peak < 0:
        raise ConfigurationError("graymap peak must be nonnegative")
    if peak == 0:
        levels = np.zeros(m.shape, dtype=np.uint8)
    else:
        levels = np.clip(np.rint(m * (255.0 / peak)), 0, 255).astype(np.uint8)
    rows, cols = m.shape
    header = f"P5\n{cols} {rows}\n255\n".encode("ascii")
    Path(path).write_bytes(header + levels.tobytes())
    return peak


def write_json(path, obj) -> None:
    """Sidecar metadata: sorted keys, two-space indent, trailing newline."""
    text = json.dumps(obj, sort_keys=True, indent=2)
    Path(path).write_text(text + "\n", encoding="ascii", newline="\n")
