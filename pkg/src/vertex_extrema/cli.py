"""Command-line front end.

Exit status: 0 when every checked claim passed, 1 when a violation was found,
2 on bad input or usage.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .decomposition import decompose
from .errors import GeometryError
from .extremality import analyze
from .generator import GenSpec, random_generic_convex
from .polygon import Polygon, polygon_from_json
from .search import SearchConfig, execute_search, replay, worker_count
from .svg import render_svg
from .triangulation import triangulate
from .verification import polygon_records

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2


def _load(path: str) -> Polygon:
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    return polygon_from_json(json.loads(text))


def _pair(text: str) -> tuple[int, int]:
    try:
        i, j = (int(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected i,j but got {text!r}")
    return i, j


def _claims(text: str) -> tuple[str, ...]:
    return tuple(c.strip() for c in text.split(",") if c.strip())


def _emit(doc) -> None:
    print(json.dumps(doc, indent=2))


def cmd_analyze(args) -> int:
    _emit(analyze(_load(args.polygon)).to_json())
    return EXIT_OK


def cmd_triangulate(args) -> int:
    _emit(triangulate(_load(args.polygon), args.kind).to_json())
    return EXIT_OK


def cmd_decompose(args) -> int:
    dec = decompose(_load(args.polygon), args.diagonal)
    _emit({"diagonal": dec.diagonal.as_list(),
           "p1": {**dec.p1.to_json(), "parent_indices": list(dec.p1_map)},
           "p2": {**dec.p2.to_json(), "parent_indices": list(dec.p2_map)}})
    return EXIT_OK


def _write_records(records, fh) -> bool:
    ok = True
    for r in records:
        fh.write(json.dumps(r.to_json(), sort_keys=True) + "\n")
        ok &= r.passed
    return ok


def cmd_verify(args) -> int:
    records = polygon_records(_load(args.polygon), args.claims)
    return EXIT_OK if _write_records(records, sys.stdout) else EXIT_VIOLATION


def cmd_replay(args) -> int:
    records = replay(args.seed, args.n, args.claims, args.diagonal)
    return EXIT_OK if _write_records(records, sys.stdout) else EXIT_VIOLATION


def cmd_generate(args) -> int:
    P = random_generic_convex(GenSpec(args.n, args.seed, args.radius_scale, args.max_retries))
    _emit(P.to_json())
    return EXIT_OK


def cmd_render(args) -> int:
    svg = render_svg(_load(args.polygon), circles=args.circles, triangulation=args.triangulation)
    Path(args.out).write_text(svg)
    return EXIT_OK


def cmd_search(args) -> int:
    try:
        cfg = SearchConfig(trials=args.trials, n_min=args.n_min, n_max=args.n_max,
                           seed=args.seed, claims=args.claims, output=args.out)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    workers = worker_count(args.workers)
    if args.out:
        out = Path(args.out)
        try:
            out.parent.mkdir(parents=True, exist_ok=True)
            with out.open("w") as fh:
                report = execute_search(cfg, fh, workers)
            summary = out.with_name(out.stem + ".summary.json")
            summary.write_text(json.dumps(report.to_json(), indent=2, sort_keys=True) + "\n")
            if not args.no_figures:
                from .figures import summary_figure
                summary_figure(report, out.with_name(out.stem + ".png"))
        except OSError as exc:
            print(f"error: cannot write report: {exc}", file=sys.stderr)
            return EXIT_USAGE
        _emit(report.to_json())
    else:
        report = execute_search(cfg, sys.stdout, workers)
        print(json.dumps(report.to_json(), sort_keys=True), file=sys.stderr)
    return EXIT_OK if report.passed else EXIT_VIOLATION


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vertex-extrema",
        description="Extremal vertices, Delaunay/anti-Delaunay triangulations and "
                    "decomposition checks for generic convex polygons.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="global and local extremality report")
    p.add_argument("polygon", help="polygon JSON file, or - for stdin")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("triangulate", help="Delaunay or anti-Delaunay triangulation")
    p.add_argument("polygon")
    p.add_argument("--kind", choices=("delaunay", "anti"), default="delaunay")
    p.set_defaults(func=cmd_triangulate)

    p = sub.add_parser("decompose", help="split a polygon along a diagonal")
    p.add_argument("polygon")
    p.add_argument("--diagonal", type=_pair, required=True, metavar="I,J")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("verify", help="check every claim on one polygon (JSON lines)")
    p.add_argument("polygon")
    p.add_argument("--claims", type=_claims, default=None)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", help="randomized counterexample search")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--n-min", type=int, default=6)
    p.add_argument("--n-max", type=int, default=10)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--claims", type=_claims, default=None,
                   help="comma-separated claim tags or families, e.g. thm4.1,lemma4.2-max")
    p.add_argument("--out", help="JSON-lines record file; a .summary.json and .png go next to it")
    p.add_argument("--workers", type=int, default=None,
                   help="worker processes (capped by $VERTEX_EXTREMA_THREADS)")
    p.add_argument("--no-figures", action="store_true")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("replay", help="recompute the records of one search trial")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--diagonal", type=_pair, default=None, metavar="I,J")
    p.add_argument("--claims", type=_claims, default=None)
    p.set_defaults(func=cmd_replay)

    p = sub.add_parser("generate", help="random generic convex polygon")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--radius-scale", type=int, default=10**6)
    p.add_argument("--max-retries", type=int, default=64)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("render", help="SVG diagram of a polygon")
    p.add_argument("polygon")
    p.add_argument("--out", required=True)
    p.add_argument("--circles", choices=("extremal", "all", "none"), default="extremal")
    p.add_argument("--triangulation", choices=("delaunay", "anti"), default=None)
    p.set_defaults(func=cmd_render)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (GeometryError, ValueError, KeyError, OSError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
