"""Experiment-theory comparison for measured force curves.

Residuals delta_F(a_i) = F_exp(a_i) - F_theor(a_i) are the quantity of
interest: their size in units of the measurement error decides whether the
data and the prediction agree, and their lower confidence bound feeds the
new-force constraint.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Sequence

import numpy as np

from .errors import DataFormatError


@dataclass(frozen=True)
class ExperimentRecord:
    """One measured point: separation [m], force [pN], one-sigma error [pN]."""

    separation: float
    force_measured: float
    sigma: float

    def __post_init__(self):
        if not self.separation > 0:
            raise ValueError("separation must be positive")
        if not self.sigma > 0:
            raise ValueError("sigma must be positive")


@dataclass(frozen=True)
class ResidualRow:
    separation: float
    force_measured: float
    force_theory: float
    delta_f: float
    sigma_ratio: float


@dataclass(frozen=True)
class ResidualReport:
    """Per-point residuals plus rms deviation and worst sigma exceedance."""

    rows: tuple[ResidualRow, ...]
    rms_deviation: float
    max_sigma_exceedance: float


def load_experiment(path) -> list[ExperimentRecord]:
    """Read (a [nm], F [pN], sigma [pN]) rows; returns records sorted by a.

    Lines starting with '#' are comments; columns may be separated by
    commas or whitespace.  Separations are converted to meters.  Duplicate
    separations are kept (stable order).
    """
    path = Path(path)
    if not path.is_file():
        raise FileNotFoundError(f"experiment file not found: {path}")
    records = []
    for lineno, raw in enumerate(path.read_text().splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.replace(",", " ").split()
        if len(parts) != 3:
            raise DataFormatError(
                f"{path}:{lineno}: expected 3 columns (a_nm, F_pN, sigma_pN), "
                f"got {len(parts)}")
        try:
            a_nm, f_pn, sigma = (float(p) for p in parts)
        except ValueError:
            raise DataFormatError(f"{path}:{lineno}: non-numeric value") from None
        try:
            records.append(ExperimentRecord(a_nm * 1e-9, f_pn, sigma))
        except ValueError as exc:
            raise DataFormatError(f"{path}:{lineno}: {exc}") from None
    if not records:
        raise DataFormatError(f"{path}: no data rows")
    records.sort(key=lambda r: r.separation)
    return records


def residual_report(records: Sequence[ExperimentRecord],
                    theory: Callable[[float], float],
                    range_filter: tuple[float, float] | None = None
                    ) -> ResidualReport:
    """Residuals of the records against a theory evaluator (separation -> pN).

    `range_filter` = (a_lo, a_hi) in meters restricts the included rows
    (inclusive).  Raises if no record survives the filter.
    """
    selected = list(records)
    if range_filter is not None:
        a_lo, a_hi = range_filter
        selected = [r for r in selected if a_lo <= r.separation <= a_hi]
    if not selected:
        raise ValueError("no experiment records in the requested range")
    rows = []
    for rec in selected:
        f_th = theory(rec.separation)
        delta = rec.force_measured - f_th
        rows.append(ResidualRow(rec.separation, rec.force_measured, f_th,
                                delta, delta / rec.sigma))
    rms = math.sqrt(sum(r.delta_f**2 for r in rows) / len(rows))
    worst = max(abs(r.sigma_ratio) for r in rows)
    return ResidualReport(tuple(rows), rms, worst)


def residual_lower_bound(delta_f: float, sigma: float,
                         confidence_sigmas: float) -> float:
    """delta_f minus confidence_sigmas standard deviations, floored at zero."""
    if delta_f <= 0 or sigma <= 0 or confidence_sigmas < 0:
        raise ValueError("delta_f and sigma must be positive, "
                         "confidence_sigmas non-negative")
    return max(0.0, delta_f - confidence_sigmas * sigma)


def grid_theory(theory: Callable[[float], float], a_lo: float, a_hi: float,
                n_points: int) -> Callable[[float], float]:
    """Precompute `theory` on a log grid and return a log-log interpolant.

    Used to speed up residual reports over many separations; with the force
    varying smoothly as a power of a, a modest grid keeps the interpolation
    error far below the measurement noise.
    """
    if n_points < 2:
        raise ValueError("need at least 2 grid points")
    if not 0 < a_lo < a_hi:
        raise ValueError("need 0 < a_lo < a_hi")
    grid = np.exp(np.linspace(math.log(a_lo), math.log(a_hi), n_points))
    ln_f = np.log([theory(float(a)) for a in grid])
    ln_a = np.log(grid)

    def interpolated(a: float) -> float:
        # tolerate unit-roundoff overshoot from nm <-> m conversions
        if a_lo * (1 - 1e-12) <= a < a_lo:
            a = a_lo
        elif a_hi < a <= a_hi * (1 + 1e-12):
            a = a_hi
        if not a_lo <= a <= a_hi:
            raise ValueError(f"separation {a} outside grid [{a_lo}, {a_hi}]")
        return float(math.exp(np.interp(math.log(a), ln_a, ln_f)))

    return interpolated
