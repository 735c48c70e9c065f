"""Command-line front end: run one experiment, write CSV snapshots/summary,
optionally render SVG plots.

Exit codes: 0 success, 1 usage error, 2 runtime failure.
"""

from __future__ import annotations

import argparse
import math
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Sequence

from .diagnostics import DiagnosticsRecord, convexity_indicator
from .experiments import ExperimentConfig, ExperimentKind, run_experiment
from .kernels import SchemeKind
from .solver import GridField
from .svgplot import render_svg

__all__ = ["CliRequest", "parse_args", "write_snapshot_csv", "write_summary_csv", "main"]

_EXPERIMENTS = ("sine", "triangle", "square", "extreme")
_SCHEMES = ("cip", "rational", "modified-rational", "hybrid")
_DEFAULT_N = {"sine": 100, "triangle": 200, "square": 200, "extreme": 150}
_MIN_N = {"sine": 16, "triangle": 64, "square": 64, "extreme": 120}


@dataclass(frozen=True)
class CliRequest:
    experiment: str
    scheme: str
    n_points: int
    cfl: float
    n_steps: int
    alpha_scale: float
    snapshot_every: int
    out_dir: Path
    svg: bool


class _Parser(argparse.ArgumentParser):
    # usage problems exit 1 (argparse default is 2, which we reserve for
    # runtime failures)
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _build_parser() -> _Parser:
    parser = _Parser(prog="semilag1d", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)
    runp = sub.add_parser("run", help="run one experiment and write outputs")
    runp.add_argument("--experiment", required=True, choices=_EXPERIMENTS)
    runp.add_argument("--scheme", default="hybrid", choices=_SCHEMES)
    runp.add_argument("--n", type=int, default=None, help="grid points (per-experiment default)")
    runp.add_argument("--cfl", type=float, default=0.2)
    runp.add_argument("--steps", type=int, required=True)
    runp.add_argument("--alpha-scale", type=float, default=1.0,
                      help="scale the hybrid scheme's optimal weight")
    runp.add_argument("--snapshot-every", type=int, default=None,
                      help="snapshot cadence (default: steps/10 rounded up)")
    runp.add_argument("--out", default="out", help="output directory")
    runp.add_argument("--svg", action="store_true", help="also render SVG plots")
    return parser


def parse_args(argv: Sequence[str]) -> CliRequest:
    """Parse and validate CLI arguments; exits with status 1 on bad usage."""
    parser = _build_parser()
    args = parser.parse_args(argv)
    n = args.n if args.n is not None else _DEFAULT_N[args.experiment]
    if n < _MIN_N[args.experiment]:
        parser.error(f"--n must be >= {_MIN_N[args.experiment]} for {args.experiment}")
    if not (0.0 < args.cfl <= 1.0):
        parser.error(f"--cfl must lie in (0, 1], got {args.cfl}")
    if args.steps < 0:
        parser.error("--steps must be >= 0")
    if args.alpha_scale < 0.0:
        parser.error("--alpha-scale must be >= 0")
    snap = args.snapshot_every
    if snap is None:
        snap = max(1, math.ceil(args.steps / 10)) if args.steps else 1
    if snap < 1:
        parser.error("--snapshot-every must be >= 1")
    return CliRequest(
        experiment=args.experiment,
        scheme=args.scheme,
        n_points=n,
        cfl=args.cfl,
        n_steps=args.steps,
        alpha_scale=args.alpha_scale,
        snapshot_every=snap,
        out_dir=Path(args.out),
        svg=args.svg,
    )


def _g17(v: float) -> str:
    # 17 significant digits round-trips any double
    return format(float(v), ".17g")


def write_snapshot_csv(path, step: int, state: GridField, p) -> None:
    """One row per node: step,i,x,f,d,p (p empty on the trailing half-cell)."""
    try:
        with open(path, "w", newline="") as fh:
            fh.write("step,i,x,f,d,p\n")
            n = state.n
            x = state.x
            for i in range(n):
                pcol = _g17(p[i]) if i < n - 1 else ""
                fh.write(
                    f"{step},{i},{_g17(x[i])},{_g17(state.f[i])},{_g17(state.d[i])},{pcol}\n"
                )
    except OSError as exc:
        raise OSError(f"cannot write snapshot {path}: {exc}") from exc


def write_summary_csv(path, records: Sequence[DiagnosticsRecord]) -> None:
    """Per-snapshot summary table; l1_error column empty when undefined."""
    try:
        with open(path, "w", newline="") as fh:
            fh.write("step,l1_error,f_max,f_min,pos_regions,neg_regions\n")
            for r in records:
                err = _g17(r.l1_error) if r.l1_error is not None else ""
                fh.write(
                    f"{r.step},{err},{_g17(r.f_max)},{_g17(r.f_min)},{r.pos_regions},{r.neg_regions}\n"
                )
    except OSError as exc:
        raise OSError(f"cannot write summary {path}: {exc}") from exc


def _run(req: CliRequest) -> None:
    config = ExperimentConfig(
        kind=ExperimentKind(req.experiment),
        n_points=req.n_points,
        cfl=req.cfl,
        n_steps=req.n_steps,
        scheme=SchemeKind(req.scheme, req.alpha_scale),
        snapshot_every=req.snapshot_every,
    )
    result = run_experiment(config)
    req.out_dir.mkdir(parents=True, exist_ok=True)
    for step_idx, state in result.snapshots:
        write_snapshot_csv(
            req.out_dir / f"snapshot_{step_idx:06d}.csv",
            step_idx,
            state,
            convexity_indicator(state.f),
        )
    write_summary_csv(req.out_dir / "summary.csv", result.records)
    if req.svg:
        label = req.scheme
        if req.scheme == "hybrid" and req.alpha_scale != 1.0:
            label = f"hybrid (alpha-scale {req.alpha_scale:g})"
        _, final_state = result.snapshots[-1]
        (req.out_dir / "profile.svg").write_text(
            render_svg([(label, final_state)], "profile")
        )
        (req.out_dir / "indicator.svg").write_text(
            render_svg([(label, final_state)], "indicator")
        )
        (req.out_dir / "extrema.svg").write_text(render_svg(result.records, "extrema"))
        if any(r.l1_error is not None for r in result.records):
            (req.out_dir / "error.svg").write_text(render_svg(result.records, "error"))
    print(
        f"{req.experiment}/{req.scheme}: {req.n_steps} steps, "
        f"{len(result.snapshots)} snapshots -> {req.out_dir}"
    )


def main(argv: Optional[Sequence[str]] = None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    req = parse_args(list(argv))
    try:
        _run(req)
    except (ValueError, RuntimeError, OSError) as exc:
        print(f"semilag1d: error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
