"""Semi-Lagrangian time stepping on a uniform 1D grid.

Each step traces the characteristic through every node one local Courant
fraction into the upwind cell, interpolates value and derivative there with
the selected kernel, and rescales the transported derivative by
``1 - du/dx * dt`` (centered-difference velocity gradient).  The update is
Jacobi-style: all reads come from the pre-step state, so nodes can be
processed in any order or in parallel.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Callable, Optional

import numpy as np

from . import core
from .kernels import SchemeKind

__all__ = [
    "GridField",
    "VelocityField",
    "BoundaryKind",
    "StepParams",
    "local_courant",
    "velocity_gradient",
    "max_cfl",
    "step",
    "run",
]


@dataclass
class GridField:
    """Nodal values ``f`` and nodal derivatives ``d`` on a uniform grid."""

    f: np.ndarray
    d: np.ndarray
    h: float

    def __post_init__(self):
        self.f = np.array(self.f, dtype=np.float64)
        self.d = np.array(self.d, dtype=np.float64)
        if self.f.ndim != 1 or self.d.ndim != 1 or self.f.shape != self.d.shape:
            raise ValueError("f and d must be 1D arrays of equal length")
        if self.f.shape[0] < 3:
            raise ValueError("grid needs at least 3 nodes")
        if not (np.isfinite(self.f).all() and np.isfinite(self.d).all()):
            raise ValueError("grid data must be finite")
        if not (np.isfinite(self.h) and self.h > 0):
            raise ValueError(f"grid spacing must be positive, got {self.h}")
        self.h = float(self.h)

    @property
    def n(self) -> int:
        return self.f.shape[0]

    @property
    def x(self) -> np.ndarray:
        """Node coordinates i * h."""
        return np.arange(self.n) * self.h

    def copy(self) -> "GridField":
        return GridField(self.f, self.d, self.h)


@dataclass
class VelocityField:
    """Nodal advection velocities, constant in time."""

    u: np.ndarray

    def __post_init__(self):
        self.u = np.array(self.u, dtype=np.float64)
        if self.u.ndim != 1:
            raise ValueError("u must be a 1D array")
        if not np.isfinite(self.u).all():
            raise ValueError("velocities must be finite")


class BoundaryKind(Enum):
    PERIODIC = "periodic"
    FIXED_EDGES = "fixed-edges"


@dataclass(frozen=True)
class StepParams:
    """Time step size; the CFL condition max|u| * dt / h <= 1 must hold."""

    dt: float

    def __post_init__(self):
        if not (np.isfinite(self.dt) and self.dt > 0):
            raise ValueError(f"dt must be positive, got {self.dt}")


def local_courant(u_i: float, dt: float, h: float) -> tuple[float, int]:
    """Courant fraction and upwind offset for one node.

    Returns ``(k, offset)`` with k = |u| * dt / h and offset +1 when the flow
    comes from the next node (u < 0), else -1.  At u = 0 the offset is -1 by
    convention; k = 0 makes the choice irrelevant.
    """
    k = (abs(u_i) * dt) / h
    if k > 1.0:
        raise ValueError(f"CFL violation: |u|*dt/h = {k} > 1 (u={u_i}, dt={dt}, h={h})")
    return k, (1 if u_i < 0.0 else -1)


def _neighbor(i: int, offset: int, n: int, bc: BoundaryKind) -> int:
    j = i + offset
    if bc is BoundaryKind.PERIODIC:
        return j % n
    return min(max(j, 0), n - 1)


def velocity_gradient(vel: VelocityField, i: int, bc: BoundaryKind, h: float) -> float:
    """Second-order centered du/dx at node ``i`` under the boundary rule."""
    n = vel.u.shape[0]
    jp = _neighbor(i, 1, n, bc)
    jm = _neighbor(i, -1, n, bc)
    return (vel.u[jp] - vel.u[jm]) / (2.0 * h)


def max_cfl(vel: VelocityField, dt: float, h: float) -> float:
    """Largest |u| * dt / h over the grid."""
    if vel.u.size == 0:
        return 0.0
    return float(np.max((np.abs(vel.u) * dt) / h))


def _check_cfl(vel: VelocityField, dt: float, h: float) -> None:
    k = (np.abs(vel.u) * dt) / h
    worst = int(np.argmax(k))
    if k[worst] > 1.0:
        raise ValueError(
            f"CFL violation at node {worst}: |u|*dt/h = {k[worst]} > 1 "
            f"(u={vel.u[worst]}, dt={dt}, h={h})"
        )


def step(
    state: GridField,
    vel: VelocityField,
    params: StepParams,
    scheme: SchemeKind,
    bc: BoundaryKind = BoundaryKind.PERIODIC,
) -> GridField:
    """Advance one time step; returns a fresh GridField (input untouched)."""
    if vel.u.shape != state.f.shape:
        raise ValueError("velocity and grid sizes differ")
    _check_cfl(vel, params.dt, state.h)
    f_new, d_new = core.step_arrays(
        state.f,
        state.d,
        vel.u,
        state.h,
        params.dt,
        scheme.code,
        scheme.alpha_scale,
        bc is BoundaryKind.PERIODIC,
    )
    if not (np.isfinite(f_new).all() and np.isfinite(d_new).all()):
        raise RuntimeError("solution diverged: non-finite values after step")
    return GridField(f_new, d_new, state.h)


def run(
    state: GridField,
    vel: VelocityField,
    params: StepParams,
    scheme: SchemeKind,
    bc: BoundaryKind,
    n_steps: int,
    snapshot_every: Optional[int] = None,
    observer: Optional[Callable[[int, GridField], None]] = None,
) -> GridField:
    """Apply ``step`` ``n_steps`` times.

    The observer, when given, is called with ``(step_index, state)`` at step
    0, every ``snapshot_every`` steps, and at the final step.  Step errors
    propagate annotated with the failing step index.
    """
    if n_steps < 0:
        raise ValueError("n_steps must be >= 0")
    if snapshot_every is not None and snapshot_every < 1:
        raise ValueError("snapshot_every must be >= 1")
    _check_cfl(vel, params.dt, state.h)
    if observer is not None:
        observer(0, state)
    for i in range(1, n_steps + 1):
        try:
            state = step(state, vel, params, scheme, bc)
        except (ValueError, RuntimeError) as exc:
            raise RuntimeError(f"step {i} failed: {exc}") from exc
        if observer is not None and (
            i == n_steps or (snapshot_every is not None and i % snapshot_every == 0)
        ):
            observer(i, state)
    return state
