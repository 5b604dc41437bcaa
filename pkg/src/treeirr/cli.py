"""Command-line front end.

Exit codes: 0 success, 2 usage or parse error, 3 strict-mode claim failure,
4 enumeration cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from pathlib import Path

from .claims import SuiteParams, active_ids, run_suite, summary_table
from .claims.report import report_to_json
from .degseq import DegreeSequence, Orientation
from .errors import CapExceededError, TreeirrError
from .extremal import (
    DEFAULT_ENUM_CAP,
    HARD_ENUM_CAP,
    EnumerationMode,
    enumerate_trees,
    extremal_index,
)
from .families import parse_family
from .graphs import SimpleGraph, parse_edge_list
from .indices import IndexKind, compute_all

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_STRICT_FAIL = 3
EXIT_CAP = 4


def _fmt_value(v) -> str:
    if isinstance(v, Fraction):
        return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
    return str(v)


def _load_graph(args) -> SimpleGraph:
    if args.family:
        return parse_family(args.family)
    text = Path(args.file).read_text(encoding="utf-8")
    return parse_edge_list(text)


def _parse_kinds(spec: str) -> list[IndexKind]:
    if spec == "all":
        return list(IndexKind)
    return [IndexKind.from_name(tok) for tok in spec.split(",")]


def _cmd_compute(args) -> int:
    g = _load_graph(args)
    kinds = _parse_kinds(args.index)
    values = compute_all(g)
    rows = [(k.value, values[k]) for k in kinds]
    if args.format == "json":
        print(json.dumps({name: _fmt_value(v) for name, v in rows}, indent=2))
    elif args.format == "csv":
        for name, v in rows:
            print(f"{name},{_fmt_value(v)}")
    else:
        for name, v in rows:
            print(f"{name:<12} {_fmt_value(v)}")
    return EXIT_OK


def _degseq_from_args(args) -> DegreeSequence:
    orientation = (Orientation.NON_DECREASING if args.order == "inc"
                   else Orientation.NON_INCREASING)
    return DegreeSequence.parse(args.degseq, orientation)


def _enum_cap(args) -> int:
    return HARD_ENUM_CAP if args.unsafe_cap else min(args.cap, HARD_ENUM_CAP)


def _cmd_extremal(args) -> int:
    d = _degseq_from_args(args)
    kind = IndexKind.from_name(args.index)
    res = extremal_index(d, kind, witness_cap=args.witness_cap,
                         cap=_enum_cap(args), workers=args.threads)
    payload = {
        "degseq": list(d.values),
        "index": kind.value,
        "min": res.min_value,
        "max": res.max_value,
        "count_labeled": res.count_labeled,
        "count_iso": res.count_iso,
        "min_witnesses": [[list(e) for e in t.sorted_edges()]
                          for t in res.min_witness_graphs],
        "max_witnesses": [[list(e) for e in t.sorted_edges()]
                          for t in res.max_witness_graphs],
    }
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(f"index        {kind.value}")
        print(f"min          {res.min_value}")
        print(f"max          {res.max_value}")
        print(f"labeled      {res.count_labeled}")
        print(f"iso classes  {res.count_iso}")
        for label, graphs in (("min", res.min_witness_graphs),
                              ("max", res.max_witness_graphs)):
            for t in graphs:
                edges = " ".join(f"{u}-{v}" for u, v in t.sorted_edges())
                print(f"{label} witness  {edges}")
    return EXIT_OK


def _cmd_enumerate(args) -> int:
    d = _degseq_from_args(args)
    mode = (EnumerationMode.LABELED if args.mode == "labeled"
            else EnumerationMode.UP_TO_ISO)
    stream = enumerate_trees(d, mode, cap=_enum_cap(args))
    if args.count_only:
        print(sum(1 for _ in stream))
        return EXIT_OK
    for t in stream:
        print(" ".join(f"{u}-{v}" for u, v in t.sorted_edges()))
    return EXIT_OK


def _cmd_verify(args) -> int:
    if args.claims == "all":
        claim_filter = None
    else:
        claim_filter = set(args.claims.split(","))
        unknown = claim_filter - set(active_ids())
        if unknown:
            raise TreeirrError(f"unknown or inactive claims: {sorted(unknown)}")
    params = SuiteParams(n_min=args.nmin, n_max=min(args.nmax, HARD_ENUM_CAP))
    report = run_suite(params=params, claim_filter=claim_filter)
    if args.out:
        Path(args.out).write_text(report_to_json(report), encoding="utf-8")
    print(summary_table(report))
    if args.strict:
        watched = claim_filter if claim_filter is not None else set(active_ids())
        for block in report.claims:
            if block["id"] in watched and block["counts"]["fail"] > 0:
                return EXIT_STRICT_FAIL
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="treeirr",
        description="Irregularity indices on trees: compute, enumerate, "
                    "search extrema, and verify published formulas.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common_enum(p):
        p.add_argument("--cap", type=int, default=DEFAULT_ENUM_CAP,
                       help="enumeration cap on the order (default 9)")
        p.add_argument("--unsafe-cap", action="store_true",
                       help=f"raise the cap to {HARD_ENUM_CAP}")
        p.add_argument("--order", choices=("inc", "dec"), default="dec",
                       help="orientation of the given degree sequence")

    p = sub.add_parser("compute", help="compute indices on a graph")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--file", help="edge-list file (first line n, then u v)")
    src.add_argument("--family",
                     help="family spec: star:n path:n dstar:k,r kmn:m,n "
                          "cat:d1-d2-... ucat:k,m")
    p.add_argument("--index", default="all",
                   help="comma list of indices, or 'all'")
    p.add_argument("--format", choices=("table", "json", "csv"),
                   default="table")
    p.set_defaults(func=_cmd_compute)

    p = sub.add_parser("extremal", help="index extrema over trees of a "
                                        "degree sequence")
    p.add_argument("--degseq", required=True, help="e.g. 4,2,2,1,1,1,1")
    p.add_argument("--index", required=True)
    p.add_argument("--witness-cap", type=int, default=4)
    p.add_argument("--threads", type=int,
                   default=int(os.environ.get("DEGSEQ_THREADS", "1") or 1))
    p.add_argument("--format", choices=("table", "json"), default="table")
    add_common_enum(p)
    p.set_defaults(func=_cmd_extremal)

    p = sub.add_parser("enumerate", help="list or count trees of a degree "
                                         "sequence")
    p.add_argument("--degseq", required=True)
    p.add_argument("--mode", choices=("labeled", "iso"), default="labeled")
    p.add_argument("--count-only", action="store_true")
    add_common_enum(p)
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("verify", help="run the claim-verification suite")
    p.add_argument("--claims", default="all",
                   help="comma list of claim ids, or 'all'")
    p.add_argument("--nmin", type=int, default=3)
    p.add_argument("--nmax", type=int, default=7)
    p.add_argument("--out", help="write the JSON report here")
    p.add_argument("--strict", action="store_true",
                   help="exit 3 when a selected claim records a FAIL")
    p.set_defaults(func=_cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (TreeirrError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
