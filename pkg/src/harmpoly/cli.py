"""Command-line entry point: ``harmpoly {compute,generate,verify,mine-collisions}``.

Exit status: 0 on success, 1 on a theorem failure or invariant violation,
2 on a usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import families
from .formats import FormatError, iter_records, parse_edge_list, write_graph6
from .graph import GraphError
from .indices import InvariantError, harmonic_polynomial, index_report, parse_alpha
from .polynomial import to_text as poly_text
from .verifier import (
    EnumerationLimitError,
    default_workers,
    mine_collisions,
    resolve_registry,
    verify_corpus,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def _write_json(path: str | None, obj) -> None:
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(_dump(obj) + "\n")


def _open_input(path: str):
    return sys.stdin if path == "-" else open(path, encoding="ascii")


def cmd_compute(args) -> int:
    alphas = [parse_alpha(a) for a in args.alpha.split(",") if a.strip()] if args.alpha else []
    stream = _open_input(args.input)
    try:
        if args.format == "edgelist":
            graphs = [parse_edge_list(stream.read())]
        else:
            graphs = iter_records(stream, args.format)
        for i, g in enumerate(graphs):
            report = index_report(g, alphas)
            if args.report == "json":
                print(json.dumps(report.to_json(), sort_keys=True))
            else:
                if i:
                    print()
                print(report.to_text())
    finally:
        if stream is not sys.stdin:
            stream.close()
    return EXIT_OK


def cmd_generate(args) -> int:
    spec = families.parse_family(args.family)
    g = families.generate(spec)
    if args.emit == "edgelist":
        print(f"n={g.n}")
        for u, v in g.edges:
            print(u, v)
    else:
        print(write_graph6(g))
    if not args.report:
        return EXIT_OK
    computed = harmonic_polynomial(g)
    out = sys.stdout
    print(f"family: {spec}  n={g.n} m={g.m}", file=out)
    print(f"computed:    {poly_text(computed)}", file=out)
    try:
        closed = families.closed_form_polynomial(spec)
    except families.ClosedFormUnavailable as exc:
        ok = computed.nonzero_count == exc.nonzero_count and tuple(computed.terms()) == exc.support
        print(f"closed form: not available; expected K={exc.nonzero_count}, "
              f"support={list(exc.support)}: {'match' if ok else 'MISMATCH'}", file=out)
        return EXIT_OK if ok else EXIT_FAIL
    ok = closed == computed
    print(f"closed form: {poly_text(closed)}: {'match' if ok else 'MISMATCH'}", file=out)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_verify(args) -> int:
    report = verify_corpus(
        args.nmax,
        connected_only=args.connected,
        registry=args.theorems,
        workers=args.workers,
        n_min=args.nmin,
        allow_large=args.allow_large,
    )
    print(report.to_text())
    _write_json(args.json, report.to_json())
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_mine(args) -> int:
    pairs = mine_collisions(args.nmax, allow_large=args.allow_large)
    for p in pairs:
        status = "ok" if p.ok else "DISAGREE"
        print(f"{write_graph6(p.first):<10} {write_graph6(p.second):<10} {poly_text(p.polynomial):<28} {status}")
    bad = sum(not p.ok for p in pairs)
    print(f"{len(pairs)} pairs, {bad} disagreements")
    _write_json(args.json, {"n_max": args.nmax, "pairs": [p.to_json() for p in pairs]})
    return EXIT_OK if bad == 0 else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="harmpoly", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="harmonic polynomial and indices of input graphs")
    p.add_argument("--input", default="-", help="path, or - for stdin (default)")
    p.add_argument("--format", choices=("g6", "s6", "edgelist"), default="g6")
    p.add_argument("--report", choices=("json", "text"), default="text")
    p.add_argument("--alpha", help="comma-separated exponents, e.g. -1,1/2,2")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("generate", help="build a family member and compare with its closed form")
    p.add_argument("--family", required=True, help="e.g. wheel:6, kbip:2,3, trtree:4")
    p.add_argument("--emit", choices=("g6", "edgelist"))
    p.add_argument("--report", action="store_true")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("verify", help="check every theorem on all labeled graphs up to nmax")
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--nmin", type=int, default=1)
    p.add_argument("--connected", action="store_true")
    p.add_argument("--theorems", default="all", help="comma-separated ids, or all")
    p.add_argument("--workers", type=int, default=default_workers(),
                   help="worker processes (default: $HP_WORKERS or 1)")
    p.add_argument("--json", help="write the JSON report here")
    p.add_argument("--allow-large", action="store_true", help="permit n = 8")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("mine-collisions", help="non-isomorphic graphs with equal polynomials")
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--json")
    p.add_argument("--allow-large", action="store_true")
    p.set_defaults(func=cmd_mine)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "theorems", None) is not None:
        try:
            resolve_registry(args.theorems)
        except KeyError as exc:
            parser.error(str(exc.args[0]))
    try:
        return args.func(args)
    except InvariantError as exc:
        print(f"invariant violation: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except (FormatError, GraphError, families.FamilyError, EnumerationLimitError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
