"""Command-line surface: simplify, verify, compare, oracle, render, bench.

Reports are tab-separated key/value or table lines with a stable key set,
and documents are JSON with sorted keys and repr-exact floats, so byte
determinism holds for everything except wall-clock benchmark output.
Exit codes: 0 success, 1 domain or config error, 2 I/O error.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
import time
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .baselines import douglas_peucker, imai_iri
from .curve import CurvePoint, FormatError, OrderError, Polyline, load_curve
from .dlc import Simplification, simplify_2approx
from .geom import DEFAULT_TOLERANCE, Point, set_tolerance
from .links import verify_simplification
from .oracle import CapacityError, GridSpec, oracle_min_dlc, oracle_min_simplification
from .render import render_svg

ALGORITHMS = ("dlc2approx", "imai-iri", "douglas-peucker", "oracle")


class _Parser(argparse.ArgumentParser):
    """argparse exits with 2 on usage errors; config errors are domain errors here."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


@dataclass
class RunConfig:
    input: str
    epsilon: float
    algorithm: str = "dlc2approx"
    grid: int | None = None
    output: str | None = None

    def __post_init__(self) -> None:
        if not (math.isfinite(self.epsilon) and self.epsilon > 0.0):
            raise ValueError(f"epsilon must be positive and finite, got {self.epsilon!r}")
        if self.algorithm not in ALGORITHMS:
            raise ValueError(f"unknown algorithm {self.algorithm!r}")
        if self.algorithm == "oracle":
            if self.grid is None:
                raise ValueError("--grid is required with the oracle algorithm")
            if self.grid < 2:
                raise ValueError(f"--grid must be at least 2, got {self.grid}")


def _emit(lines: list[str], output: str | None = None) -> None:
    text = "\n".join(lines) + "\n"
    sys.stdout.write(text)
    if output:
        Path(output).write_text(text)


def _write_doc(doc: dict, path: str) -> None:
    Path(path).write_text(json.dumps(doc, indent=2, sort_keys=True) + "\n")


def _run_algorithm(curve: Polyline, name: str, eps: float, grid: int | None) -> Simplification:
    if name == "dlc2approx":
        return simplify_2approx(curve, eps)
    if name == "imai-iri":
        return imai_iri(curve, eps)
    if name == "douglas-peucker":
        return douglas_peucker(curve, eps)
    return oracle_min_simplification(curve, eps, GridSpec(grid))


def _max_distance(curve: Polyline, simp: Simplification, eps: float) -> float:
    report = verify_simplification(curve, simp.chain, eps)
    return max((lc.distance for lc in report.links), default=0.0)


def _chain_from_doc(doc) -> tuple[list[CurvePoint], float]:
    try:
        chain = [CurvePoint(int(p["edge"]), float(p["t"])) for p in doc["chain"]]
        eps = float(doc["epsilon"])
    except (KeyError, TypeError, IndexError) as exc:
        raise FormatError(f"malformed simplification document: {exc}") from None
    return chain, eps


def cmd_simplify(args) -> int:
    cfg = RunConfig(input=args.input, epsilon=args.epsilon, algorithm=args.algorithm,
                    grid=args.grid, output=args.output)
    curve = load_curve(cfg.input)
    simp = _run_algorithm(curve, cfg.algorithm, cfg.epsilon, cfg.grid)
    lines = [
        "command\tsimplify",
        f"algorithm\t{cfg.algorithm}",
        f"epsilon\t{cfg.epsilon!r}",
        f"links\t{simp.link_count}",
        f"dlc_size\t{simp.dlc_size if simp.dlc_size is not None else '-'}",
        f"max_distance\t{_max_distance(curve, simp, cfg.epsilon)!r}",
        f"verified\t{'true' if simp.verified else 'false'}",
    ]
    sys.stdout.write("\n".join(lines) + "\n")
    if cfg.output:
        _write_doc(simp.to_document(curve), cfg.output)
    return 0


def cmd_verify(args) -> int:
    curve = load_curve(args.input)
    doc = json.loads(Path(args.simplification).read_text())
    chain, doc_eps = _chain_from_doc(doc)
    eps = args.epsilon if args.epsilon is not None else doc_eps
    if not (math.isfinite(eps) and eps > 0.0):
        raise ValueError(f"epsilon must be positive and finite, got {eps!r}")
    report = verify_simplification(curve, chain, eps)
    lines = ["command\tverify", f"epsilon\t{eps!r}", f"links\t{len(chain) - 1}"]
    for err in report.structural_errors:
        lines.append(f"structural\t{err}")
    for idx, lc in enumerate(report.links):
        worst = lc.worst_vertex if lc.worst_vertex is not None else "-"
        lines.append(f"link\t{idx}\t{lc.distance!r}\t{worst}")
    lines.append(f"passed\t{'true' if report.passed else 'false'}")
    sys.stdout.write("\n".join(lines) + "\n")
    return 0 if report.passed else 1


def cmd_compare(args) -> int:
    cfg = RunConfig(input=args.input, epsilon=args.epsilon,
                    algorithm="oracle" if args.grid else "dlc2approx",
                    grid=args.grid, output=args.output)
    curve = load_curve(cfg.input)
    names = ["dlc2approx", "imai-iri", "douglas-peucker"] + (["oracle"] if args.grid else [])
    lines = ["algorithm\tlinks\tmax_distance\tverified"]
    overlays = []
    for name in names:
        simp = _run_algorithm(curve, name, cfg.epsilon, cfg.grid)
        maxd = _max_distance(curve, simp, cfg.epsilon)
        lines.append(f"{name}\t{simp.link_count}\t{maxd!r}\t{'true' if simp.verified else 'false'}")
        overlays.append((name, simp.chain))
    _emit(lines, cfg.output)
    if args.figure:
        from .figures import comparison_figure

        comparison_figure(curve, overlays, cfg.epsilon, args.figure)
    return 0


def cmd_oracle(args) -> int:
    cfg = RunConfig(input=args.input, epsilon=args.epsilon, algorithm="oracle",
                    grid=args.grid, output=args.output)
    curve = load_curve(cfg.input)
    spec = GridSpec(cfg.grid)
    if args.variant == "simplification":
        simp = oracle_min_simplification(curve, cfg.epsilon, spec)
        lines = [
            "command\toracle",
            "variant\tsimplification",
            f"epsilon\t{cfg.epsilon!r}",
            f"grid\t{cfg.grid}",
            f"links\t{simp.link_count}",
            f"verified\t{'true' if simp.verified else 'false'}",
        ]
        sys.stdout.write("\n".join(lines) + "\n")
        if cfg.output:
            _write_doc(simp.to_document(curve), cfg.output)
        return 0
    dlc = oracle_min_dlc(curve, cfg.epsilon, spec)
    try:
        dlc.validate(curve)
        ok = True
    except ValueError:
        ok = False
    lines = [
        "command\toracle",
        "variant\tdlc",
        f"epsilon\t{cfg.epsilon!r}",
        f"grid\t{cfg.grid}",
        f"size\t{dlc.size}",
        f"verified\t{'true' if ok else 'false'}",
    ]
    sys.stdout.write("\n".join(lines) + "\n")
    if cfg.output:
        def point_doc(cp: CurvePoint) -> dict:
            pt = curve.embed(cp)
            return {"edge": cp.edge, "t": cp.t, "x": pt.x, "y": pt.y}

        doc = {
            "epsilon": cfg.epsilon,
            "grid": cfg.grid,
            "size": dlc.size,
            "links": [{"start": point_doc(l.start), "end": point_doc(l.end)} for l in dlc.links],
        }
        _write_doc(doc, cfg.output)
    return 0


def cmd_render(args) -> int:
    curve = load_curve(args.input)
    chain = None
    eps = args.epsilon
    if args.simplification:
        doc = json.loads(Path(args.simplification).read_text())
        chain, doc_eps = _chain_from_doc(doc)
        if eps is None:
            eps = doc_eps
    svg = render_svg(curve, chain, eps, show_disks=args.show_disks, stroke_scale=args.stroke_scale)
    if args.svg:
        Path(args.svg).write_text(svg)
    else:
        sys.stdout.write(svg)
    return 0


def _walk_curve(n: int, seed: int = 7) -> Polyline:
    rng = np.random.default_rng(seed + n)
    headings = np.cumsum(rng.uniform(-0.7, 0.7, size=n - 1))
    steps = np.stack([np.cos(headings), np.sin(headings)], axis=1)
    verts = np.vstack([[0.0, 0.0], np.cumsum(steps, axis=0)])
    return Polyline([Point(float(x), float(y)) for x, y in verts])


def cmd_bench(args) -> int:
    sizes = sorted({int(s) for s in args.sizes.split(",") if s.strip()})
    if not sizes or sizes[0] < 3:
        raise ValueError(f"--sizes needs integers >= 3, got {args.sizes!r}")
    names = ["dlc2approx", "imai-iri", "douglas-peucker"] if args.algorithm == "all" else [args.algorithm]
    eps = args.epsilon
    rows: list[tuple[int, str, float]] = []
    for n in sizes:
        curve = _walk_curve(n)
        for name in names:
            t0 = time.perf_counter()
            _run_algorithm(curve, name, eps, None)
            rows.append((n, name, time.perf_counter() - t0))
    lines = ["n\talgorithm\tseconds"]
    for n, name, dt in rows:
        lines.append(f"{n}\t{name}\t{dt:.6f}")
    slopes: dict[str, float] = {}
    if len(sizes) >= 2:
        for name in names:
            ts = [max(dt, 1e-9) for (n, nm, dt) in rows if nm == name]
            slope = float(np.polyfit(np.log(sizes), np.log(ts), 1)[0])
            slopes[name] = slope
            lines.append(f"slope\t{name}\t{slope:.3f}")
    _emit(lines, args.output)
    if args.figure:
        from .figures import bench_figure

        bench_figure(rows, slopes, args.figure)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="curvemin", description="Curve-restricted polyline simplification within a distance budget.")
    parser.add_argument("--tolerance", type=float, default=None,
                        help=f"closed-predicate slack (default {DEFAULT_TOLERANCE}, env CURVEMIN_TOL)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("simplify", help="simplify a curve and report link counts")
    p.add_argument("--input", "-i", required=True)
    p.add_argument("--epsilon", "-e", type=float, required=True)
    p.add_argument("--algorithm", "-a", choices=ALGORITHMS, default="dlc2approx")
    p.add_argument("--grid", type=int, default=None, help="samples per edge (oracle only)")
    p.add_argument("--output", "-o", default=None, help="write the simplification document here")
    p.set_defaults(func=cmd_simplify)

    p = sub.add_parser("verify", help="re-check a simplification document against its curve")
    p.add_argument("--input", "-i", required=True)
    p.add_argument("--simplification", "-s", required=True)
    p.add_argument("--epsilon", "-e", type=float, default=None,
                   help="override the document's epsilon")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("compare", help="run every algorithm on one curve and tabulate")
    p.add_argument("--input", "-i", required=True)
    p.add_argument("--epsilon", "-e", type=float, required=True)
    p.add_argument("--grid", type=int, default=None, help="also run the grid oracle at this resolution")
    p.add_argument("--output", "-o", default=None)
    p.add_argument("--figure", default=None, help="write a comparison PNG here")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("oracle", help="grid brute-force reference")
    p.add_argument("--input", "-i", required=True)
    p.add_argument("--epsilon", "-e", type=float, required=True)
    p.add_argument("--grid", type=int, required=True)
    p.add_argument("--variant", choices=("simplification", "dlc"), default="simplification")
    p.add_argument("--output", "-o", default=None)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("render", help="write a deterministic SVG of curve and simplification")
    p.add_argument("--input", "-i", required=True)
    p.add_argument("--simplification", "-s", default=None)
    p.add_argument("--epsilon", "-e", type=float, default=None)
    p.add_argument("--show-disks", action="store_true")
    p.add_argument("--stroke-scale", type=float, default=1.0)
    p.add_argument("--svg", default=None, help="output path (stdout if omitted)")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("bench", help="time the algorithms on synthetic curves")
    p.add_argument("--sizes", default="8,16,24")
    p.add_argument("--algorithm", "-a", choices=("all",) + ALGORITHMS[:3], default="all")
    p.add_argument("--epsilon", "-e", type=float, default=1.0)
    p.add_argument("--output", "-o", default=None)
    p.add_argument("--figure", default=None, help="write a log-log runtime PNG here")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.tolerance is not None:
            set_tolerance(args.tolerance)
        elif os.environ.get("CURVEMIN_TOL"):
            set_tolerance(float(os.environ["CURVEMIN_TOL"]))
        return args.func(args)
    except (FormatError, OrderError, CapacityError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
