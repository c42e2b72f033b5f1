"""Command-line surface: eval, grid, constants, verify, deriv, sum.

Exit codes: 0 success, 1 verification failure, 2 usage/domain error.
Data files use 17 significant digits (round-trip for doubles); human
summaries use 6.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass

from .types import HalfPlanePoint, RangeOverflowError, AccuracyError
from . import core, bounds, derivatives, extremal, summation, verify

_G17 = "{:.17g}"

__all__ = ["main", "GridSpec"]


@dataclass(frozen=True)
class GridSpec:
    x_min: float
    x_max: float
    y_min: float
    y_max: float
    rows: int  # y samples per constant-x block
    cols: int  # x blocks

    def __post_init__(self) -> None:
        if self.x_min < 0:
            raise ValueError(f"x_min must be >= 0, got {self.x_min}")
        if not (self.x_min < self.x_max and self.y_min < self.y_max):
            raise ValueError("need x_min < x_max and y_min < y_max")
        if self.rows < 2 or self.cols < 2:
            raise ValueError("rows and cols must be >= 2")
        if self.rows * self.cols > 10**7:
            raise ValueError("grid too large (rows*cols > 1e7)")


_GRID_DEFAULTS = {
    "absS": GridSpec(0.0, 8.0, -8.0, 8.0, 41, 41),
    "reS": GridSpec(0.0, 8.0, -8.0, 8.0, 41, 41),
    "imS": GridSpec(0.0, 16.0, -8.0, 8.0, 41, 41),
}

_QUANTITY_FNS = {
    "absS": lambda p: abs(core.S(p).value),
    "reS": lambda p: core.S(p).value.real,
    "imS": lambda p: core.S(p).value.imag,
}


def _parse_z(text: str) -> HalfPlanePoint:
    try:
        x_str, y_str = text.split(",")
        return HalfPlanePoint(float(x_str), float(y_str))
    except ValueError as exc:
        raise ValueError(f"bad point {text!r}: {exc}") from exc


def _cmd_eval(args) -> int:
    p = _parse_z(args.z)
    if args.q == "phi":
        value = core.phi(p.z)
        err, method = 2.5e-16 * abs(value), "taylor"
    else:
        fn = {"R": core.inverse_mills, "S": core.S, "r": core.mills_ratio,
              "tail": core.gaussian_tail}[args.q]
        ev = fn(p)
        value, err, method = ev.value, ev.abs_error_estimate, ev.method.value
    print(f"{args.q} {_G17.format(value.real)} {_G17.format(value.imag)} "
          f"{_G17.format(err)} {method}")
    return 0


def _cmd_grid(args) -> int:
    spec = _GRID_DEFAULTS[args.quantity]
    overrides = {k: getattr(args, k) for k in
                 ("x_min", "x_max", "y_min", "y_max", "rows", "cols")
                 if getattr(args, k) is not None}
    if overrides:
        spec = GridSpec(**{**spec.__dict__, **overrides})
    fn = _QUANTITY_FNS[args.quantity]
    try:
        out = open(args.out, "w", encoding="utf-8")
    except OSError as exc:
        print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
        return 2
    with out:
        if args.header:
            out.write(f"# quantity={args.quantity}\n")
            out.write(f"# x in [{spec.x_min}, {spec.x_max}] cols={spec.cols}\n")
            out.write(f"# y in [{spec.y_min}, {spec.y_max}] rows={spec.rows}\n")
        for i in range(spec.cols):
            x = spec.x_min + (spec.x_max - spec.x_min) * i / (spec.cols - 1)
            for j in range(spec.rows):
                y = spec.y_min + (spec.y_max - spec.y_min) * j / (spec.rows - 1)
                v = fn(HalfPlanePoint(x, y))
                out.write(f"{_G17.format(x)} {_G17.format(y)} {_G17.format(v)}\n")
            if i < spec.cols - 1:
                out.write("\n")
    return 0


def _cmd_constants(args) -> int:
    consts = extremal.find_y_star()
    payload = {
        "y_star": consts.y_star,
        "s_at_y_star": consts.s_at_y_star,
        "x_star": consts.x_star,
        "S_at_x_star": consts.S_at_x_star,
        "y21": consts.y21,
        "y22": consts.y22,
        "brackets": {
            "y_star": list(consts.y_star_bracket),
            "s_at_y_star": [0.6861, 0.6863],
        },
    }
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        lo, hi = consts.y_star_bracket
        print(f"y_star       = {consts.y_star:.6f}  (bracket [{lo:.8f}, {hi:.8f}])")
        print(f"|S(i y_star)| = {consts.s_at_y_star:.6f}  (certified [0.6861, 0.6863])")
        print(f"x_star       = {consts.x_star:.6f}  ((pi-1)*sqrt(2/pi))")
        print(f"S(x_star)    = {consts.S_at_x_star:.6f}")
        print(f"y21          = {consts.y21:.6f}")
        print(f"y22          = {consts.y22:.6f}")
    return 0


def _cmd_verify(args) -> int:
    summary = verify.run_verification(level=args.level, seed=args.seed)
    for suite in summary.suites:
        status = "ok" if not suite.failures else f"{len(suite.failures)} FAILED"
        print(f"{suite.name}: {suite.checks_run} checks, {status}")
    for f in summary.failures:
        print(f"FAIL {f.check} at {f.point}: {f.detail}")
    print(f"total: {summary.checks_run} checks, {len(summary.failures)} failures, "
          f"{summary.wall_time:.1f}s")
    return 0 if summary.ok else 1


def _cmd_deriv(args) -> int:
    p = _parse_z(args.z)
    if p.x <= 0:
        print("error: deriv requires Re z > 0", file=sys.stderr)
        return 2
    ev = derivatives.derivative_cauchy(args.n, p)
    env = bounds.derivative_bound(args.n, p)
    marker = "within_bound" if abs(ev.value) <= env else "BOUND_VIOLATED"
    print(f"R^({args.n}) {_G17.format(ev.value.real)} {_G17.format(ev.value.imag)} "
          f"{_G17.format(ev.abs_error_estimate)} bound={_G17.format(env)} {marker}")
    return 0


def _cmd_sum(args) -> int:
    req = summation.SumRequest(x0=args.x0, delta=args.delta, count=args.n,
                               order=args.order)

    def emit(res: summation.SumResult) -> None:
        print(f"{res.method.value} {_G17.format(res.value)} "
              f"{_G17.format(res.remainder_bound)} {res.terms_evaluated}")

    direct = None
    if args.method in ("direct", "both"):
        direct = summation.sum_direct(req)
        emit(direct)
    if args.method in ("em", "both"):
        try:
            em = summation.sum_euler_maclaurin(req)
        except (AccuracyError, RangeOverflowError) as exc:
            print(f"warning: euler_maclaurin unavailable ({exc}); "
                  "falling back to direct", file=sys.stderr)
            if direct is None:
                emit(summation.sum_direct(req))
            return 0
        if not math.isfinite(em.remainder_bound) or \
                em.remainder_bound > args.tol * abs(em.value):
            print(f"warning: remainder bound {em.remainder_bound:.6g} exceeds "
                  f"tolerance {args.tol:.1g} * |value|; prefer the direct sum",
                  file=sys.stderr)
        emit(em)
        if direct is not None:
            print(f"discrepancy {_G17.format(abs(direct.value - em.value))}")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="invmills",
        description="Inverse Mills ratio on the right half-plane: evaluation, "
                    "derivatives, extremal constants, and verification sweeps.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate one quantity at a point")
    p_eval.add_argument("--z", required=True, metavar="X,Y")
    p_eval.add_argument("--q", required=True, choices=["R", "S", "r", "phi", "tail"])
    p_eval.set_defaults(func=_cmd_eval)

    p_grid = sub.add_parser("grid", help="emit a surface table for plotting")
    p_grid.add_argument("--quantity", required=True, choices=["absS", "reS", "imS"])
    p_grid.add_argument("--out", required=True)
    for flag in ("x-min", "x-max", "y-min", "y-max"):
        p_grid.add_argument(f"--{flag}", type=float, default=None)
    p_grid.add_argument("--rows", type=int, default=None)
    p_grid.add_argument("--cols", type=int, default=None)
    p_grid.add_argument("--header", action="store_true")
    p_grid.set_defaults(func=_cmd_grid)

    p_consts = sub.add_parser("constants", help="extremal constants report")
    p_consts.add_argument("--format", choices=["text", "json"], default="text")
    p_consts.set_defaults(func=_cmd_constants)

    p_verify = sub.add_parser("verify", help="run the verification sweeps")
    p_verify.add_argument("--level", choices=["quick", "full"], default="quick")
    p_verify.add_argument("--seed", type=int, default=1)
    p_verify.add_argument("--threads", type=int, default=None,
                          help="accepted for compatibility; execution is sequential")
    p_verify.set_defaults(func=_cmd_verify)

    p_deriv = sub.add_parser("deriv", help="n-th derivative of R with its bound")
    p_deriv.add_argument("--n", type=int, required=True)
    p_deriv.add_argument("--z", required=True, metavar="X,Y")
    p_deriv.set_defaults(func=_cmd_deriv)

    p_sum = sub.add_parser("sum", help="sum R over an arithmetic grid")
    p_sum.add_argument("--x0", type=float, required=True)
    p_sum.add_argument("--delta", type=float, required=True)
    p_sum.add_argument("--n", type=int, required=True)
    p_sum.add_argument("--order", type=int, default=4)
    p_sum.add_argument("--method", choices=["direct", "em", "both"], default="both")
    p_sum.add_argument("--tol", type=float, default=1e-6,
                       help="relative tolerance for the remainder-bound warning")
    p_sum.set_defaults(func=_cmd_sum)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, RangeOverflowError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
