"""Per-cell interpolation kernels for 1D semi-Lagrangian advection.

A semi-Lagrangian step updates each grid node from the value of the previous
solution at the characteristic foot, which lies a fraction ``k`` (the local
Courant number, in [0, 1]) of the way into the upwind cell.  The solution is
carried as nodal values *and* nodal first derivatives, so each cell supports a
Hermite interpolant built from four numbers plus the signed cell width.

Three interpolants are provided:

* ``eval_cubic`` -- the classical Hermite cubic.  Third-order accurate but
  free to overshoot, which shows up as ringing around steep gradients.
* ``eval_rational`` -- a rational Hermite form whose second derivative keeps
  one sign across any cell whose data is convex or concave (the slope lies
  strictly between the two end derivatives, with room to spare on both
  sides).  No new extrema can appear, at the price of extra diffusion.
* ``eval_hybrid`` -- a blend ``alpha * rational + (1 - alpha) * cubic``.
  ``optimal_alpha`` returns, cell by cell, the smallest weight for which the
  blend still cannot change the sign of its second derivative, so the cubic
  dominates wherever the data allows it.

All quantities live on a single cell described by :class:`CellStencil`; the
cell's slope and the two curvature surrogates derived from it decide which
kernels are admissible.  Every function here is pure and safe to call from
concurrent workers.

Floating-point note: the value/derivative expressions below are written in a
fixed association order that the array step cores replicate verbatim; edits
here must be mirrored in ``_core_np.py`` and ``_core_cy.pyx`` to keep the
backends bitwise-identical.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple

__all__ = [
    "CellStencil",
    "CellClass",
    "MixingState",
    "InterpResult",
    "SchemeKind",
    "CIP",
    "RATIONAL",
    "MODIFIED_RATIONAL",
    "HYBRID",
    "hybrid_scheme",
    "cell_from_nodes",
    "classify_cell",
    "eval_cubic",
    "eval_rational",
    "optimal_alpha",
    "eval_hybrid",
    "hybrid_second_derivative",
    "feasibility_margin",
    "interpolate",
]


@dataclass(frozen=True)
class CellStencil:
    """One upwind cell: values and derivatives at both ends, signed width.

    ``h_signed`` is positive when the upwind neighbor sits at the next node in
    the +x direction and negative when it sits at the previous node.  The far
    end is always the upwind neighbor.
    """

    f_near: float
    f_far: float
    d_near: float
    d_far: float
    h_signed: float

    @property
    def slope(self) -> float:
        """Divided difference across the cell."""
        return (self.f_far - self.f_near) / self.h_signed

    @property
    def curv_near(self) -> float:
        """Curvature surrogate at the near end: (slope - d_near) * h_signed."""
        return (self.slope - self.d_near) * self.h_signed

    @property
    def curv_far(self) -> float:
        """Curvature surrogate at the far end: (d_far - slope) * h_signed."""
        return (self.d_far - self.slope) * self.h_signed


class CellClass(Enum):
    """Cell data classification for kernel admissibility."""

    CONVEX_OR_CONCAVE = "convex-or-concave"
    OTHER = "other"


@dataclass(frozen=True)
class MixingState:
    """Blend weight for one convex/concave cell.

    ``ratio`` is curv_far / curv_near (positive on convex/concave data),
    ``asymmetry`` is max(2, ratio, 1/ratio), and ``alpha`` in [0, 1) is the
    smallest rational weight that preserves the sign of the blended second
    derivative.  ``alpha`` is 0 exactly when the asymmetry bound is not
    binding (ratio between 1/2 and 2).
    """

    ratio: float
    asymmetry: float
    alpha: float


class InterpResult(NamedTuple):
    """Interpolated value and spatial derivative at the characteristic foot."""

    value: float
    deriv: float


@dataclass(frozen=True)
class SchemeKind:
    """Scheme selector: which kernel the per-node dispatch uses.

    ``alpha_scale`` only matters for the hybrid scheme; the per-cell optimal
    weight is multiplied by it (then clamped to [0, 1]).  A scale below 1
    deliberately under-weights the rational part, which is useful for
    demonstrating that the optimal weight is indeed minimal.
    """

    name: str
    alpha_scale: float = 1.0

    _NAMES = ("cip", "rational", "modified-rational", "hybrid")

    def __post_init__(self):
        if self.name not in self._NAMES:
            raise ValueError(f"unknown scheme {self.name!r}; expected one of {self._NAMES}")
        if not math.isfinite(self.alpha_scale) or self.alpha_scale < 0.0:
            raise ValueError(f"alpha_scale must be finite and >= 0, got {self.alpha_scale}")

    @property
    def code(self) -> int:
        """Integer code used by the array step cores."""
        return self._NAMES.index(self.name)


CIP = SchemeKind("cip")
RATIONAL = SchemeKind("rational")
MODIFIED_RATIONAL = SchemeKind("modified-rational")
HYBRID = SchemeKind("hybrid")


def hybrid_scheme(alpha_scale: float = 1.0) -> SchemeKind:
    """Hybrid scheme with the per-cell optimal weight scaled by ``alpha_scale``."""
    return SchemeKind("hybrid", alpha_scale)


def cell_from_nodes(
    f_near: float, f_far: float, d_near: float, d_far: float, h_signed: float
) -> CellStencil:
    """Build a :class:`CellStencil`, rejecting non-finite data and zero width."""
    for name, v in (
        ("f_near", f_near),
        ("f_far", f_far),
        ("d_near", d_near),
        ("d_far", d_far),
        ("h_signed", h_signed),
    ):
        if not math.isfinite(v):
            raise ValueError(f"{name} must be finite, got {v}")
    if h_signed == 0.0:
        raise ValueError("h_signed must be nonzero")
    return CellStencil(float(f_near), float(f_far), float(d_near), float(d_far), float(h_signed))


def classify_cell(cell: CellStencil) -> CellClass:
    """Convex/concave iff both curvature surrogates have the same strict sign.

    The comparison is exact: cells on the boundary (either surrogate zero)
    classify as OTHER and fall back to the cubic kernel, which is continuous
    in the data there.
    """
    if cell.curv_near * cell.curv_far > 0.0:
        return CellClass.CONVEX_OR_CONCAVE
    return CellClass.OTHER


def _require_convex(cell: CellStencil, op: str) -> None:
    if classify_cell(cell) is not CellClass.CONVEX_OR_CONCAVE:
        raise ValueError(f"{op} requires convex or concave cell data (curvature surrogates {cell.curv_near}, {cell.curv_far})")


def eval_cubic(cell: CellStencil, k: float) -> InterpResult:
    """Hermite cubic value and spatial derivative at Courant fraction ``k``."""
    p = cell.curv_near
    q = cell.curv_far
    hs = cell.h_signed
    c2 = 2.0 * p - q
    c3 = q - p
    kk = k * k
    value = cell.f_near + cell.d_near * hs * k + c2 * kk + c3 * (kk * k)
    deriv = cell.d_near + (2.0 * c2 * k + 3.0 * c3 * kk) / hs
    return InterpResult(value, deriv)


def _eval_blend(cell: CellStencil, k: float, alpha: float) -> InterpResult:
    # Compact blended form; denominator sign is pinned by the convexity guard
    # (it equals curv_near times a factor >= min(1, ratio) > 0).
    p = cell.curv_near
    q = cell.curv_far
    hs = cell.h_signed
    den = q + (p - q) * k
    g1 = alpha * (p * p) / den
    g2 = (1.0 - alpha) * (2.0 * p - den)
    kk = k * k
    value = cell.f_near + cell.d_near * hs * k + (g1 + g2) * kk
    deriv = cell.d_near + (
        g1 * ((q + den) / den) + 2.0 * g2 + (1.0 - alpha) * (q - den)
    ) * (k / hs)
    return InterpResult(value, deriv)


def eval_rational(cell: CellStencil, k: float) -> InterpResult:
    """Convexity-preserving rational value and spatial derivative at ``k``.

    Raises ValueError on cells that are not convex or concave; there the
    rational denominator may vanish inside the cell and the form is unusable.
    """
    _require_convex(cell, "eval_rational")
    return _eval_blend(cell, k, 1.0)


def optimal_alpha(cell: CellStencil) -> MixingState:
    """Smallest blend weight that keeps the blended cell convexity-safe.

    The weight depends only on the asymmetry of the two curvature surrogates:
    with m = max(2, ratio, 1/ratio), alpha = m(m-2) / (m(m-2) + 1).  It is 0
    exactly when the ratio lies in [1/2, 2] and approaches 1 for extreme
    asymmetry, but never reaches it.
    """
    _require_convex(cell, "optimal_alpha")
    p = cell.curv_near
    q = cell.curv_far
    ratio = q / p
    inv = p / q
    m = ratio if ratio > inv else inv
    if m < 2.0:
        m = 2.0
    t = m * (m - 2.0)
    alpha = t / (t + 1.0)
    return MixingState(ratio=ratio, asymmetry=m, alpha=alpha)


def eval_hybrid(cell: CellStencil, k: float, alpha: float) -> InterpResult:
    """Blend of rational and cubic kernels with weight ``alpha``.

    ``alpha = 0`` is exactly the cubic and is valid on any cell; any positive
    weight requires convex or concave data.  Equals
    ``alpha * eval_rational(...) + (1 - alpha) * eval_cubic(...)``.
    """
    if not 0.0 <= alpha <= 1.0:
        raise ValueError(f"alpha must lie in [0, 1], got {alpha}")
    if alpha == 0.0:
        return eval_cubic(cell, k)
    _require_convex(cell, "eval_hybrid with alpha > 0")
    return _eval_blend(cell, k, alpha)


def hybrid_second_derivative(cell: CellStencil, k: float, alpha: float) -> float:
    """Second spatial derivative of the blended interpolant at ``k``.

    On convex data (both curvature surrogates negative) this stays <= 0 for
    every k in [0, 1] when ``alpha`` is at least the optimal weight; on
    concave data the sign flips.  Used as the direct oracle for the
    convexity-preservation guarantee.
    """
    _require_convex(cell, "hybrid_second_derivative")
    p = cell.curv_near
    q = cell.curv_far
    hs = cell.h_signed
    den = q + (p - q) * k
    rational_part = 2.0 * (p * p) * (q * q) / (den * den * den)
    cubic_part = 2.0 * (3.0 * (q - p) * k + 2.0 * p - q)
    return (alpha * rational_part + (1.0 - alpha) * cubic_part) / (hs * hs)


def feasibility_margin(cell: CellStencil, k: float, alpha: float) -> float:
    """Dimensionless convexity margin of the blend at (``k``, ``alpha``).

    Non-negative exactly when the blended second derivative keeps the sign of
    the cell's curvature at this ``k``.  For asymmetry ratios above 2 the
    margin is tight (zero) at k = 0 with the optimal weight; for ratios below
    1/2 the mirrored bound is tight at k = 1.
    """
    _require_convex(cell, "feasibility_margin")
    ratio = cell.curv_far / cell.curv_near
    g = (1.0 - ratio) * k + ratio
    bound = (g * g * g) * (3.0 * (ratio - 1.0) * k + 2.0 - ratio)
    return alpha * (ratio * ratio) + (1.0 - alpha) * bound


def interpolate(scheme: SchemeKind, cell: CellStencil, k: float) -> InterpResult:
    """Evaluate one cell under the given scheme's dispatch rule.

    cip: always cubic.  rational: rational on convex/concave cells, cubic
    elsewhere.  modified-rational: rational only on convex/concave cells whose
    end derivatives have opposite signs, cubic elsewhere.  hybrid: blended
    with the scaled optimal weight on convex/concave cells, cubic elsewhere.
    The dispatch guarantees each kernel's preconditions, so this never raises
    on valid stencils.
    """
    name = scheme.name
    if name == "cip":
        return eval_cubic(cell, k)
    convex = classify_cell(cell) is CellClass.CONVEX_OR_CONCAVE
    if name == "rational":
        if convex:
            return _eval_blend(cell, k, 1.0)
        return eval_cubic(cell, k)
    if name == "modified-rational":
        if convex and cell.d_near * cell.d_far < 0.0:
            return _eval_blend(cell, k, 1.0)
        return eval_cubic(cell, k)
    # hybrid
    if convex:
        alpha = optimal_alpha(cell).alpha * scheme.alpha_scale
        if alpha < 0.0:
            alpha = 0.0
        if alpha > 1.0:
            alpha = 1.0
        if alpha > 0.0:
            return _eval_blend(cell, k, alpha)
    return eval_cubic(cell, k)
