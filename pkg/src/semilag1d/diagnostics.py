"""Measurement quantities for advection runs.

The convexity indicator assigns +1/2, 0 or -1/2 to each half-cell from the
sign of the forward difference; counting its contiguous sign regions detects
spurious oscillation (an intact single pulse has exactly one positive and one
negative region).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

__all__ = [
    "DiagnosticsRecord",
    "l1_error",
    "convexity_indicator",
    "count_sign_regions",
    "field_extrema",
]


@dataclass(frozen=True)
class DiagnosticsRecord:
    """Per-snapshot measurements; ``l1_error`` is None without an analytic reference."""

    step: int
    l1_error: Optional[float]
    f_max: float
    f_min: float
    pos_regions: int
    neg_regions: int

    def __post_init__(self):
        if self.pos_regions < 0 or self.neg_regions < 0:
            raise ValueError("region counts must be >= 0")
        if self.f_max < self.f_min:
            raise ValueError("f_max must be >= f_min")


def l1_error(f: np.ndarray, exact: np.ndarray) -> float:
    """Mean absolute deviation from the reference profile."""
    f = np.asarray(f, dtype=np.float64)
    exact = np.asarray(exact, dtype=np.float64)
    if f.shape != exact.shape or f.ndim != 1 or f.size < 1:
        raise ValueError(f"array shapes differ: {f.shape} vs {exact.shape}")
    return float(np.mean(np.abs(f - exact)))


def convexity_indicator(f: np.ndarray, threshold: float = 0.0) -> np.ndarray:
    """Three-valued slope sign per half-cell: +1/2, 0, or -1/2.

    Comparisons are exact by default; a positive ``threshold`` dead-bands tiny
    differences for exploratory use (never in acceptance runs).
    """
    f = np.asarray(f, dtype=np.float64)
    if f.ndim != 1 or f.size < 2:
        raise ValueError("need a 1D array with at least 2 entries")
    diff = f[1:] - f[:-1]
    return np.where(diff > threshold, 0.5, np.where(diff < -threshold, -0.5, 0.0))


def count_sign_regions(p: np.ndarray) -> tuple[int, int]:
    """Number of maximal contiguous runs of +1/2 and of -1/2 (zeros separate)."""
    p = np.asarray(p, dtype=np.float64)
    pos = p > 0.0
    neg = p < 0.0

    def runs(mask: np.ndarray) -> int:
        if mask.size == 0:
            return 0
        starts = int(mask[0]) + int(np.count_nonzero(mask[1:] & ~mask[:-1]))
        return starts

    return runs(pos), runs(neg)


def field_extrema(f: np.ndarray) -> tuple[float, float]:
    """Exact (max, min) of the nodal values."""
    f = np.asarray(f, dtype=np.float64)
    if f.size < 1:
        raise ValueError("need at least one entry")
    return float(np.max(f)), float(np.min(f))
