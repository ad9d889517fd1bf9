"""Command-line surface.

Subcommands:

  verify   run the inequality suite on parameter grids, write a JSON report
  search   run one coefficient search, write a JSONL record
  render   sample a boundary curve f(r e^{i theta}) to CSV or SVG
  li2      evaluate the real dilogarithm
  gamma    print logarithmic coefficients of a spec
  member   run one class-membership query

Exit codes: 0 clean (for verify: no violated check), 1 verification found a
violation, 2 configuration or parse error.  File outputs are written to a
temporary file and renamed, so a killed run never leaves a truncated file.
All outputs are byte-deterministic for fixed inputs and seed.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
import tempfile
from dataclasses import dataclass

import numpy as np

from . import atlas, membership, search, verify
from .dilog import li2


def _atomic_write(path: str, text: str):
    directory = os.path.dirname(os.path.abspath(path)) or "."
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".logcoef-")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _parse_grid(text: str) -> tuple[float, ...]:
    try:
        values = tuple(float(v) for v in text.split(",") if v.strip() != "")
    except ValueError as err:
        raise ValueError(f"malformed grid {text!r}: {err}") from err
    if not values:
        raise ValueError(f"empty grid {text!r}")
    return values


# ---------------------------------------------------------------------------
# Boundary-curve rendering.

@dataclass(frozen=True)
class RenderCurve:
    """Samples of f(r e^{i theta}) at m equally spaced angles.

    The sample count is fixed at construction, every point is finite, and
    the curve closes: the theta = 0 and theta = 2 pi evaluations coincide
    to 1e-12 (the final segment back to the first point is implicit)."""

    spec: atlas.FunctionSpec
    r: float
    points: np.ndarray

    def __post_init__(self):
        if not np.all(np.isfinite(self.points)):
            raise ValueError("non-finite curve point")
        start = atlas.eval_at(self.spec, self.r * np.exp(0j))
        wrap = atlas.eval_at(self.spec, self.r * np.exp(2j * math.pi))
        # relative tolerance: near a boundary pole the function magnifies
        # the epsilon-sized angle wrap by its (huge) derivative
        if abs(start - wrap) > 1e-12 * max(1.0, abs(start)):
            raise ValueError(f"curve fails to close: gap {abs(start - wrap):.3e}")


def render_curve(spec, r: float, m: int) -> RenderCurve:
    if not (0.0 < r < 1.0):
        raise ValueError("radius must lie strictly inside (0, 1)")
    if m < 16:
        raise ValueError("need at least 16 curve samples")
    theta = 2.0 * math.pi * np.arange(m) / m
    points = np.array([atlas.eval_at(spec, r * np.exp(1j * t)) for t in theta])
    return RenderCurve(spec=spec, r=r, points=points)


def curve_points(spec, r: float, m: int) -> np.ndarray:
    return render_curve(spec, r, m).points


def curve_csv(points: np.ndarray) -> str:
    m = points.size
    lines = ["theta,re,im"]
    for k in range(m):
        theta = 2.0 * math.pi * k / m
        lines.append(f"{theta!r},{float(points[k].real)!r},{float(points[k].imag)!r}")
    return "\n".join(lines) + "\n"


def curve_svg(points: np.ndarray) -> str:
    xs = points.real
    ys = -points.imag  # SVG's y axis points down
    x0, x1 = float(xs.min()), float(xs.max())
    y0, y1 = float(ys.min()), float(ys.max())
    w = max(x1 - x0, 1e-9)
    h = max(y1 - y0, 1e-9)
    mx, my = 0.05 * w, 0.05 * h
    view = f"{x0 - mx:.6f} {y0 - my:.6f} {w + 2 * mx:.6f} {h + 2 * my:.6f}"
    stroke = max(w, h) * 0.004
    d = "M " + " L ".join(f"{x:.6f},{y:.6f}" for x, y in zip(xs, ys)) + " Z"
    return (
        '<?xml version="1.0" encoding="UTF-8"?>\n'
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'viewBox="{view}" width="640" height="640">\n'
        f'<path d="{d}" fill="none" stroke="black" stroke-width="{stroke:.6f}"/>\n'
        "</svg>\n"
    )


# ---------------------------------------------------------------------------
# Subcommands.

def _cmd_verify(args) -> int:
    lam_grid = _parse_grid(args.lambda_grid)
    alpha_grid = _parse_grid(args.alpha_grid)
    checks = verify.run_suite(lam_grid, alpha_grid, args.order)
    # the report document is the plain array of check rows
    text = json.dumps([c.to_dict() for c in checks], indent=1) + "\n"
    if args.out:
        _atomic_write(args.out, text)
    else:
        sys.stdout.write(text)
    n_viol = sum(c.status == "violated" for c in checks)
    print(f"{len(checks)} checks, {n_viol} violated", file=sys.stderr)
    return 0 if n_viol == 0 else 1


def _cmd_search(args) -> int:
    record = search.search_max_coeff(
        lam=args.lam,
        n=args.n,
        family=args.family,
        budget=args.budget,
        seed=args.seed,
    )
    line = record.to_json_line()
    if args.out:
        _atomic_write(args.out, line + "\n")
    print(line)
    return 0


def _cmd_render(args) -> int:
    spec = atlas.parse_spec(args.spec)
    points = curve_points(spec, args.r, args.m)
    text = curve_csv(points) if args.format == "csv" else curve_svg(points)
    if args.out:
        _atomic_write(args.out, text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_li2(args) -> int:
    result = li2(args.x)
    print(repr(result.value))
    return 0


def _cmd_gamma(args) -> int:
    spec = atlas.parse_spec(args.spec)
    profile = verify.log_coefficients(spec, args.n)
    for i, g in enumerate(profile.gammas, start=1):
        print(json.dumps({"n": i, "re": g.real, "im": g.imag}))
    return 0


def _cmd_member(args) -> int:
    spec = atlas.parse_spec(args.spec)
    radii = _parse_grid(args.radii)
    if args.cls == "ulambda":
        threshold = 1.0 if args.threshold is None else args.threshold
        report = membership.u_deficiency(spec, threshold, radii, args.samples)
    elif args.cls == "starlike":
        threshold = 0.0 if args.threshold is None else args.threshold
        report = membership.min_re_starlike(spec, threshold, radii, args.samples)
    else:
        threshold = 1.0 if args.threshold is None else args.threshold
        report = membership.g_class_sup(spec, threshold, radii, args.samples)
    print(json.dumps(report.to_dict()))
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="logcoef",
        description="Logarithmic coefficients of univalent functions: "
        "verification, membership, and coefficient search.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="run the inequality suite")
    p.add_argument("--lambda-grid", default="0.1,0.2,0.3,0.4,0.5,0.6,0.7,0.8,0.9,1.0")
    p.add_argument("--alpha-grid", default="0.25,0.5,0.75,1.0")
    p.add_argument("--order", type=int, default=128)
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("search", help="search a family for large |a_n|")
    p.add_argument("--lambda", dest="lam", type=float, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--family", choices=("superset", "exact_u"), default="superset")
    p.add_argument("--budget", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser("render", help="sample a boundary curve")
    p.add_argument("spec")
    p.add_argument("--r", type=float, default=0.999)
    p.add_argument("--m", type=int, default=2048)
    p.add_argument("--format", choices=("csv", "svg"), default="csv")
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_render)

    p = sub.add_parser("li2", help="evaluate the real dilogarithm")
    p.add_argument("x", type=float)
    p.set_defaults(func=_cmd_li2)

    p = sub.add_parser("gamma", help="print logarithmic coefficients")
    p.add_argument("spec")
    p.add_argument("n", type=int)
    p.set_defaults(func=_cmd_gamma)

    p = sub.add_parser("member", help="run a class-membership query")
    p.add_argument("spec")
    p.add_argument("cls", choices=("ulambda", "starlike", "galpha"))
    p.add_argument("--threshold", type=float, default=None)
    p.add_argument("--radii", default="0.9,0.99,0.999")
    p.add_argument("--samples", type=int, default=4096)
    p.set_defaults(func=_cmd_member)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
