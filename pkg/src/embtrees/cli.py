"""Command-line surface.

Subcommands: trees, dary, paths, walkers, verify, oeis.  Every numeric
option accepts exact rationals ("3", "2/7").  Environment variables
EMBTREES_ORDER, EMBTREES_FORMAT, EMBTREES_CACHE_DIR and EMBTREES_JOBS
supply defaults; explicit flags win.  All output is exact: series go out
as integer-pair strings, never floats.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import binary as B
from . import dary as D
from . import paths as P
from . import walkers as W
from .campaign import CampaignConfig, available_suites, parse_config, run_campaign
from .oeis import FIXTURES, format_b_file, oeis_fetch, oeis_match
from .serialize import SeriesCache, cache_key, export_series, fraction_str, import_series
from .series import Series
from .steps import parse_step_set


def _env_int(name: str, fallback: int) -> int:
    raw = os.environ.get(name)
    return int(raw) if raw else fallback


def _env_str(name: str, fallback: str) -> str:
    return os.environ.get(name) or fallback


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--order", type=int, default=_env_int("EMBTREES_ORDER", 30),
        help="truncation order (default 30, env EMBTREES_ORDER)",
    )
    parser.add_argument(
        "--format", choices=("json", "csv"),
        default=_env_str("EMBTREES_FORMAT", "json"),
        help="output format (env EMBTREES_FORMAT)",
    )
    parser.add_argument(
        "--cache-dir", default=os.environ.get("EMBTREES_CACHE_DIR"),
        help="directory for the advisory series cache (env EMBTREES_CACHE_DIR)",
    )
    parser.add_argument(
        "--seed", type=int, default=0,
        help="accepted for interface stability; everything is deterministic",
    )


def _emit_series(series: Series, args) -> None:
    print(export_series(series, args.format))


def _cached(args, key_parts, compute) -> Series:
    if not args.cache_dir:
        return compute()
    cache = SeriesCache(args.cache_dir)
    key = cache_key(*key_parts, args.order)
    hit = cache.get(key)
    if hit is not None:
        return hit
    series = compute()
    cache.put(key, series)
    return series


def _cmd_trees(args) -> int:
    w = B.BinaryWeights.make(args.v1, args.v2, args.w1, args.w2, args.w3)
    key = ("trees", args.v1, args.v2, args.w1, args.w2, args.w3,
           args.level, args.boundary, args.method)
    if args.level is None:
        series = _cached(args, key, lambda: B.binary_T(w, args.order))
    elif args.method == "closed":
        def compute():
            lam = B.adapt_lambda(w, 1 if args.boundary == "one" else 0, args.order + 6)
            return B.binary_Tj_closed(w, lam, args.level, args.order)
        series = _cached(args, key, compute)
    else:
        def compute():
            rows = B.binary_Tj_recurrence(
                w, 1 if args.boundary == "one" else 0, max(args.level, 0), args.order
            )
            return rows[args.level]
        series = _cached(args, key, compute)
    _emit_series(series, args)
    return 0


def _cmd_dary(args) -> int:
    fam = D.DaryFamily(args.kind, args.d)
    key = ("dary", args.kind, args.d, args.level)
    if args.level is None:
        series = _cached(args, key, lambda: D.dary_T(fam, args.order))
    else:
        def compute():
            rows = D.dary_Tj_recurrence(fam, max(args.level, 0), args.order)
            return rows[args.level]
        series = _cached(args, key, compute)
    _emit_series(series, args)
    return 0


def _cmd_paths(args) -> int:
    steps = parse_step_set(args.steps)
    if args.mark_endpoint:
        gf = P.meander_gf(steps, args.level, args.order)
        rows = {}
        top = max((max(d) for d in gf.marked.coeffs if d), default=0)
        for level in range(0, top + 1):
            slice_series = gf.marked.extract(level)
            if not slice_series.is_zero():
                rows[str(level)] = [fraction_str(c) for c in slice_series.coeffs]
        print(json.dumps({"order": args.order, "start": args.level, "rows": rows}))
        return 0
    key = ("paths", args.steps, args.level, args.excursions)
    if args.excursions:
        series = _cached(args, key, lambda: P.excursion_gf(steps, args.level, args.order))
    else:
        series = _cached(args, key, lambda: P.meander_gf(steps, args.level, args.order).plain)
    _emit_series(series, args)
    return 0


def _cmd_walkers(args) -> int:
    mode = args.mode.replace("-", "_")
    if args.oracle:
        model = W.WalkerModel(
            mode, args.steps, args.boundary,
            None if args.u is None else __import__("fractions").Fraction(args.u),
            None if args.w is None else __import__("fractions").Fraction(args.w),
        )
        counts = W.walker_dp(model, args.i, args.j, args.order)
        _emit_series(Series(counts), args)
        return 0
    if mode == "lock_step":
        if args.boundary == "refined":
            star = W.lockstep_refined(args.u or "0", args.w or "0", args.i, args.j, args.order)
        else:
            star = W.lockstep_star(args.boundary, args.i, args.j, args.order)
    else:
        star = W.randomturn_gf(args.steps, args.boundary, args.i, args.j, args.order)
    _emit_series(star.series, args)
    return 0


def _cmd_verify(args) -> int:
    if args.config:
        config = parse_config(Path(args.config).read_text())
    else:
        config = CampaignConfig()
    suites = config.suites
    if args.suite:
        suites = tuple(s for chunk in args.suite for s in chunk.split(",") if s)
    order = args.order if args.order is not None else config.order
    jobs = args.jobs if args.jobs is not None else config.jobs
    report = run_campaign(CampaignConfig(suites=suites, order=order, jobs=jobs))
    print(report.summary())
    return 0 if report.ok else 1


def _cmd_oeis(args) -> int:
    if args.fetch:
        record = oeis_fetch(args.fetch, allow_network=args.network)
        sys.stdout.write(format_b_file(record.id, record.terms))
        return 0
    if args.match:
        text = sys.stdin.read() if args.match == "-" else Path(args.match).read_text()
        series = import_series(text, "json")
        hits = oeis_match(series, min_terms=args.min_terms)
        print(json.dumps({"matches": hits}))
        return 0
    print(json.dumps({"bundled": sorted(FIXTURES)}))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="embtrees",
        description="Exact generating functions for label-bounded embedded trees, "
        "lattice meanders and non-crossing walker systems.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_trees = sub.add_parser("trees", help="binary family level series")
    for name in ("v1", "v2", "w1", "w2", "w3"):
        p_trees.add_argument(f"--{name}", default="0", help=f"weight {name} (rational)")
    p_trees.add_argument("--level", type=int, default=None, help="label bound j; omit for the free family")
    p_trees.add_argument("--boundary", choices=("one", "zero"), default="one")
    p_trees.add_argument("--method", choices=("recurrence", "closed"), default="recurrence")
    _add_common(p_trees)
    p_trees.set_defaults(fn=_cmd_trees)

    p_dary = sub.add_parser("dary", help="odd/even arity family level series")
    p_dary.add_argument("--kind", choices=("odd", "even"), required=True)
    p_dary.add_argument("--d", type=int, required=True)
    p_dary.add_argument("--level", type=int, default=None)
    _add_common(p_dary)
    p_dary.set_defaults(fn=_cmd_dary)

    p_paths = sub.add_parser("paths", help="meanders and excursions")
    p_paths.add_argument(
        "--steps", required=True,
        help='step set "b:w,b:w" with rational weights; use --steps="-1:1,1:1" '
        "for sets with negative jumps",
    )
    p_paths.add_argument("--level", type=int, default=0, help="start level")
    p_paths.add_argument("--excursions", action="store_true", help="return-to-start series")
    p_paths.add_argument("--mark-endpoint", action="store_true", help="emit all endpoint slices")
    _add_common(p_paths)
    p_paths.set_defaults(fn=_cmd_paths)

    p_walk = sub.add_parser("walkers", help="three-walker star series")
    p_walk.add_argument("--mode", choices=("lock-step", "random-turn"), default="lock-step")
    p_walk.add_argument("--steps", choices=("dyck", "motzkin"), default="dyck")
    p_walk.add_argument("--boundary", choices=("vicious", "osculating", "updown", "refined"),
                        default="vicious")
    p_walk.add_argument("--i", type=int, default=0)
    p_walk.add_argument("--j", type=int, default=0)
    p_walk.add_argument("--u", default=None, help="co-location mark (refined)")
    p_walk.add_argument("--w", default=None, help="shared-edge mark (refined)")
    p_walk.add_argument("--oracle", action="store_true", help="emit the dynamic-program counts")
    _add_common(p_walk)
    p_walk.set_defaults(fn=_cmd_walkers)

    p_verify = sub.add_parser("verify", help="run the verification campaign")
    p_verify.add_argument("--suite", action="append", default=None,
                          help=f"suite filter, may repeat; available: {', '.join(available_suites())}")
    p_verify.add_argument("--order", type=int, default=None)
    p_verify.add_argument("--jobs", type=int, default=_env_int("EMBTREES_JOBS", 1))
    p_verify.add_argument("--config", default=None, help="key=value campaign file")
    p_verify.set_defaults(fn=_cmd_verify)

    p_oeis = sub.add_parser("oeis", help="sequence cross reference (offline by default)")
    p_oeis.add_argument("--match", default=None, help="json series file, or - for stdin")
    p_oeis.add_argument("--fetch", default=None, help="sequence id to fetch")
    p_oeis.add_argument("--network", action="store_true",
                        help="allow remote fetches (default fully offline)")
    p_oeis.add_argument("--min-terms", type=int, default=8)
    p_oeis.set_defaults(fn=_cmd_oeis)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    raise SystemExit(main())
