"""Command-line entry point.

Exit codes: 0 success, 1 a well-formed "false" verdict, 2 usage or input error.
"""
from __future__ import annotations

import argparse
import contextlib
import json
import sys
from typing import Sequence, TextIO

from .algebra import enumerate_subgroupoids, find_isomorphism, property_report
from .constructions import AffineSpec, denes_keedwell, medial_affine
from .decomp import (
    AmalgamationMap,
    amalgamate,
    decomposition_from_groupoid,
    decomposition_isomorphism,
    groupoid_from_decomposition,
    parse_decomposition,
)
from .errors import PGroupoidError
from .mlt import mlt_summary
from .search import SearchConstraints, count_models, default_threads, search_p_groupoids
from .table import parse_table


class UsageError(Exception):
    pass


def _read(path: str, stdin: TextIO) -> str:
    if path == "-":
        return stdin.read()
    with open(path) as fh:
        return fh.read()


def _dump(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _looks_like_decomposition(text: str) -> bool:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError:
        return False
    return isinstance(obj, dict) and "classes" in obj


def cmd_gen_dk(args, io):
    T = denes_keedwell(args.n)
    io.out.write(T.to_json() + "\n" if args.json else T.to_text())
    return 0


def cmd_gen_affine(args, io):
    T = medial_affine(AffineSpec(args.n, args.a_f, args.a_g, args.c))
    io.out.write(T.to_json() + "\n" if args.json else T.to_text())
    return 0


def cmd_check(args, io):
    report = property_report(parse_table(_read(args.table, io.stdin)))
    io.out.write(report.to_json() + "\n" if args.json else report.summary() + "\n")
    return 0 if report.is_p_groupoid.holds else 1


def cmd_mlt(args, io):
    summary = mlt_summary(parse_table(_read(args.table, io.stdin)))
    io.out.write(_dump(summary))
    return 0


def cmd_decompose(args, io):
    T = parse_table(_read(args.table, io.stdin))
    D = decomposition_from_groupoid(T)
    if args.dot:
        with open(args.dot, "w") as fh:
            fh.write(D.to_dot())
    io.out.write(D.to_json() + "\n")
    return 0


def cmd_recompose(args, io):
    D = parse_decomposition(_read(args.decomposition, io.stdin))
    T = groupoid_from_decomposition(D)
    io.out.write(T.to_json() + "\n" if args.json else T.to_text())
    return 0


def cmd_iso(args, io):
    a, b = _read(args.first, io.stdin), _read(args.second, io.stdin)
    kinds = {_looks_like_decomposition(a), _looks_like_decomposition(b)}
    if len(kinds) != 1:
        raise UsageError("iso needs two tables or two decompositions, not one of each")
    if kinds == {True}:
        kind = "decomposition"
        phi = decomposition_isomorphism(
            parse_decomposition(a), parse_decomposition(b), strict=args.strict
        )
    else:
        kind = "table"
        phi = find_isomorphism(parse_table(a), parse_table(b))
    if args.json:
        io.out.write(_dump({
            "kind": kind,
            "isomorphic": phi is not None,
            "map": list(phi.images) if phi is not None else None,
        }))
    elif phi is None:
        io.out.write("not isomorphic\n")
    else:
        io.out.write(f"isomorphic via {' '.join(map(str, phi.images))}\n")
    return 0 if phi is not None else 1


def cmd_amalgamate(args, io):
    D = parse_decomposition(_read(args.decomposition, io.stdin))
    H = amalgamate(D, AmalgamationMap.parse(args.map))
    if args.dot:
        with open(args.dot, "w") as fh:
            fh.write(H.to_dot())
    payload = H.to_dict()
    payload["loops"] = [list(e) for e in H.loops()]
    payload["color_counts"] = {str(k): v for k, v in H.color_counts().items()}
    if args.json:
        io.out.write(_dump(payload))
    else:
        io.out.write(f"{H.n} vertices, {len(H.edges)} edges, {len(H.loops())} loops\n")
        for u, v, c in H.edges:
            io.out.write(f"{u} {v} color={c}{' loop' if u == v else ''}\n")
    return 0


def cmd_search(args, io):
    c = SearchConstraints(
        require_quasigroup=args.quasigroup,
        require_left_distributive=args.left_distributive,
        require_quandle=args.quandle,
        forbid_quandle=args.no_quandle,
        require_hamiltonian=args.hamiltonian,
        up_to_iso=args.up_to_iso,
        max_models=args.max,
        time_budget=args.time_budget,
    )
    threads = args.threads if args.threads is not None else default_threads()
    if args.count_only:
        if c.column_local and not c.up_to_iso and c.max_models is None:
            labeled, classes = count_models(args.n, c, threads)
            complete = True
        else:
            res = search_p_groupoids(args.n, c, threads)
            labeled, classes, complete = res.labeled, res.iso_classes, res.complete
        io.out.write(json.dumps({
            "n": args.n, "labeled": labeled, "iso_classes": classes, "complete": complete,
        }) + "\n")
        return 0
    res = search_p_groupoids(args.n, c, threads)
    if not res.complete:
        io.err.write("search stopped early (limit or time budget); results are partial\n")
    if args.json:
        io.out.write(_dump({
            "n": res.n,
            "labeled": res.labeled,
            "iso_classes": res.iso_classes,
            "complete": res.complete,
            "tables": [[list(r) for r in T.cells] for T in res.tables],
        }))
    else:
        io.out.write("\n".join(T.to_text() for T in res.tables))
    return 0


def cmd_subgroupoids(args, io):
    T = parse_table(_read(args.table, io.stdin))
    subs = enumerate_subgroupoids(T)
    if args.json:
        io.out.write(_dump({
            "n": T.n,
            "subgroupoids": [sorted(s) for s in subs],
            "all_orders_divide_n": all(T.n % len(s) == 0 for s in subs),
        }))
    else:
        for s in subs:
            io.out.write(f"{len(s)}: {' '.join(map(str, sorted(s)))}\n")
    return 0


def _positive_int(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    # SUPPRESS keeps a subcommand's defaults from clobbering flags given before it
    common.add_argument(
        "--json", action="store_true", default=argparse.SUPPRESS,
        help="emit the documented JSON schema",
    )
    common.add_argument("--seed", default=argparse.SUPPRESS, help=argparse.SUPPRESS)

    p = argparse.ArgumentParser(prog="pgroupoids", parents=[common], description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("gen-dk", parents=[common], help="dihedral P-quasigroup 2s-r mod n")
    s.add_argument("n", type=int)
    s.set_defaults(func=cmd_gen_dk)

    s = sub.add_parser("gen-affine", parents=[common], help="table a_f*x + a_g*y + c mod n")
    for name in ("n", "a_f", "a_g", "c"):
        s.add_argument(name, type=int)
    s.set_defaults(func=cmd_gen_affine)

    s = sub.add_parser("check", parents=[common], help="property report of a table")
    s.add_argument("table")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("mlt", parents=[common], help="multiplication groups of a table")
    s.add_argument("table")
    s.set_defaults(func=cmd_mlt)

    s = sub.add_parser("decompose", parents=[common], help="table -> decomposition JSON")
    s.add_argument("table")
    s.add_argument("--dot", metavar="PATH")
    s.set_defaults(func=cmd_decompose)

    s = sub.add_parser("recompose", parents=[common], help="decomposition JSON -> table")
    s.add_argument("decomposition")
    s.set_defaults(func=cmd_recompose)

    s = sub.add_parser("iso", parents=[common], help="isomorphism of tables or decompositions")
    s.add_argument("first")
    s.add_argument("second")
    s.add_argument("--strict", action="store_true", help="decompositions: keep class order")
    s.set_defaults(func=cmd_iso)

    s = sub.add_parser("amalgamate", parents=[common], help="image under a vertex surjection")
    s.add_argument("decomposition")
    s.add_argument("--map", required=True, help='comma-separated images, e.g. "0,1,1,2,2"')
    s.add_argument("--dot", metavar="PATH")
    s.set_defaults(func=cmd_amalgamate)

    s = sub.add_parser("search", parents=[common], help="enumerate P-groupoids of order n")
    s.add_argument("n", type=int)
    s.add_argument("--quasigroup", action="store_true")
    s.add_argument("--left-distributive", action="store_true")
    q = s.add_mutually_exclusive_group()
    q.add_argument("--quandle", action="store_true")
    q.add_argument("--no-quandle", action="store_true")
    s.add_argument("--hamiltonian", action="store_true")
    s.add_argument("--up-to-iso", action="store_true")
    s.add_argument("--count-only", action="store_true")
    s.add_argument("--max", type=_positive_int)
    s.add_argument("--time-budget", type=float, metavar="SECONDS")
    s.add_argument("--threads", type=_positive_int)
    s.set_defaults(func=cmd_search)

    s = sub.add_parser("subgroupoids", parents=[common], help="all closed subsets")
    s.add_argument("table")
    s.set_defaults(func=cmd_subgroupoids)
    return p


class _IO:
    def __init__(self, stdin, out, err):
        self.stdin, self.out, self.err = stdin, out, err


def run(
    argv: Sequence[str] | None = None,
    stdin: TextIO | None = None,
    stdout: TextIO | None = None,
    stderr: TextIO | None = None,
) -> int:
    io = _IO(stdin or sys.stdin, stdout or sys.stdout, stderr or sys.stderr)
    parser = build_parser()
    try:
        with contextlib.redirect_stderr(io.err), contextlib.redirect_stdout(io.out):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    args.json = getattr(args, "json", False)
    if getattr(args, "seed", None) is not None:
        io.err.write("error: --seed is reserved; every command is deterministic\n")
        return 2
    try:
        return args.func(args, io)
    except (PGroupoidError, UsageError, ValueError, OSError) as exc:
        io.err.write(f"error: {exc}\n")
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
