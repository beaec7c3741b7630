"""Command-line interface.

Exit codes: 0 success / property holds, 1 property fails (witness printed),
2 invalid arguments or parameters, 3 malformed input file.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import __version__
from .bounds import sweep
from .ec import default_jobs, is_n_ec, is_r_full, max_ec
from .families import FAMILIES, build
from .graph import encode_graph6, format_edge_list, parse_graph
from .reproduce import CRITERIA
from .srg import is_2ec_srg, srg_params, srg_reason

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INPUT = 0, 1, 2, 3
FILE_FAMILIES = ("latin-file-net", "sts-file-dual", "pg-file")


class InputError(Exception):
    pass


def banner() -> str:
    return f"# necgraph {__version__}"


def parse_range(text: str) -> range:
    """``"4..20"`` or ``"7"`` as an inclusive integer range."""
    try:
        if ".." in text:
            lo, hi = text.split("..")
            return range(int(lo), int(hi) + 1)
        return range(int(text), int(text) + 1)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad range {text!r}; use N or A..B") from None


def read_text(path: str) -> str:
    try:
        return sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise InputError(str(exc)) from None


def cmd_construct(args) -> int:
    text = read_text(args.input) if args.family in FILE_FAMILIES and args.input else None
    modulus = None
    if args.modulus:
        try:
            modulus = [int(c) for c in args.modulus.split(",")]
        except ValueError:
            print(f"error: bad modulus {args.modulus!r}", file=sys.stderr)
            return EXIT_USAGE
    try:
        c = build(args.family, r=args.r, p=args.p, k=args.k, modulus=modulus, group=args.group, v=args.v, text=text)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT if text is not None else EXIT_USAGE

    g6 = encode_graph6(c.graph).decode("ascii") + "\n"
    edges = format_edge_list(c.graph)
    if args.output:
        out = Path(args.output)
        if args.format == "graph6":
            out.write_text(g6)
        elif args.format == "edgelist":
            out.write_text(edges)
        else:
            out.with_name(out.name + ".g6").write_text(g6)
            out.with_name(out.name + ".edges").write_text(edges)
        print(c.summary())
    else:
        sys.stdout.write({"graph6": g6, "edgelist": edges, "both": g6 + edges}[args.format])
        print(c.summary(), file=sys.stderr)
    if args.labels:
        Path(args.labels).write_text("".join(f"{label}\n" for label in c.labels))
    if args.ls_out and c.latin_square is not None:
        Path(args.ls_out).write_text(c.latin_square.to_text())
    if args.sts_out and c.sts is not None:
        Path(args.sts_out).write_text(c.sts.to_text())
    if args.pg_out and c.geometry is not None:
        Path(args.pg_out).write_text(c.geometry.to_text())
    return EXIT_OK


def cmd_check(args) -> int:
    try:
        g = parse_graph(read_text(args.graph))
    except (ValueError, InputError) as exc:
        print(f"error: cannot read graph: {exc}", file=sys.stderr)
        return EXIT_USAGE
    labels = read_text(args.labels).splitlines() if args.labels else None
    if labels is not None and len(labels) != g.order:
        print(f"error: {len(labels)} labels for {g.order} vertices", file=sys.stderr)
        return EXIT_USAGE
    jobs = args.jobs or default_jobs()
    print(banner())
    try:
        if args.nec is not None:
            report = is_n_ec(g, args.nec, jobs)
            print(report.to_kv() if args.format == "kv" else report.to_text(labels), end="\n" if args.format != "kv" else "")
            return EXIT_OK if report.holds else EXIT_FAIL
        if args.full is not None:
            report = is_r_full(g, args.full, args.anchor)
            print(report.to_kv() if args.format == "kv" else report.to_text(), end="\n" if args.format != "kv" else "")
            return EXIT_OK if report.holds else EXIT_FAIL
        if args.max_ec is not None:
            print(f"max_ec={max_ec(g, args.max_ec, jobs)}")
            return EXIT_OK
        if args.srg:
            p = srg_params(g)
            print(f"srg=({p})" if p else f"srg=none reason={srg_reason(g)}")
            return EXIT_OK if p else EXIT_FAIL
        if args.two_ec:
            verdict = is_2ec_srg(g)
            print(f"2-e.c.: {'holds' if verdict.holds else 'fails'} ({verdict.reason})")
            return EXIT_OK if verdict.holds else EXIT_FAIL
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print("error: choose one of --nec, --full, --max-ec, --srg, --2ec", file=sys.stderr)
    return EXIT_USAGE


def cmd_screen(args) -> int:
    reports = sweep(args.s, args.t, args.alpha)
    if not reports:
        print("error: no admissible (s,t,alpha) in the given ranges", file=sys.stderr)
        return EXIT_USAGE
    print(banner())
    if args.format == "kv":
        for r in reports:
            print(r.to_kv(), end="")
        return EXIT_OK
    if args.detail:
        for r in reports:
            print(r.to_text())
        return EXIT_OK
    print(f"{'s':>4}{'t':>4}{'alpha':>6}  {'srg-3ec':>8}{'geo-3ec':>8}{'class-poly':>11}{'n_max':>6}  feasible-3ec")
    for r in reports:
        by_name = {e.name: e for e in r.entries}
        geo = by_name.get("geometric-3ec") or by_name.get("geometric-3ec-weak")
        poly = by_name.get("net-polynomial") or by_name.get("dual-design-polynomial")
        s, t, a = r.params.astuple()
        print(
            f"{s:>4}{t:>4}{a:>6}  {_mark(by_name['srg-3ec']):>8}{_mark(geo):>8}{_mark(poly):>11}"
            f"{r.n_max_possible:>6}  {'yes' if r.feasible_3ec else 'no'}"
        )
    return EXIT_OK


def _mark(entry) -> str:
    if entry is None or not entry.applicable:
        return "-"
    return "ok" if entry.satisfied else "FAIL"


def cmd_report(args) -> int:
    wanted = [args.criterion] if args.criterion else sorted(CRITERIA)
    print(banner())
    failed = 0
    for number in wanted:
        if number not in CRITERIA:
            print(f"error: no criterion {number}", file=sys.stderr)
            return EXIT_USAGE
        title, check = CRITERIA[number]
        rows = check(jobs=args.jobs or default_jobs()) if number in (1, 2) else check()
        ok = all(row[1] for row in rows)
        failed += not ok
        print(f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title}")
        for claim, good, detail in rows:
            if args.verbose or not good:
                print(f"    {'ok  ' if good else 'FAIL'} {claim}" + (f"  -- {detail}" if detail else ""))
    return EXIT_FAIL if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="necgraph", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"necgraph {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="build a graph family member")
    c.add_argument("family", choices=FAMILIES)
    c.add_argument("--r", type=int, help="symplectic half-dimension")
    c.add_argument("--p", type=int, help="field characteristic")
    c.add_argument("--k", type=int, default=1, help="field extension degree")
    c.add_argument("--modulus", help="irreducible modulus coefficients c0,c1,...,1")
    c.add_argument("--group", help="z8, z2^3, z4xz2, d4, q8, ...")
    c.add_argument("--v", type=int, help="STS order for bose-sts")
    c.add_argument("--input", help="ls/sts/pg file for the *-file families")
    c.add_argument("--format", choices=("graph6", "edgelist", "both"), default="graph6")
    c.add_argument("--output", help="output path (stdout if omitted)")
    c.add_argument("--labels", help="write vertex labels, one per line")
    c.add_argument("--ls-out", help="write the Latin square (cayley-net, latin-file-net)")
    c.add_argument("--sts-out", help="write the triple system (bose-sts, sts-file-dual)")
    c.add_argument("--pg-out", help="write the incidence structure")
    c.set_defaults(func=cmd_construct)

    k = sub.add_parser("check", help="test a graph property")
    k.add_argument("graph", help="graph6 or edge-list file ('-' for stdin)")
    prop = k.add_mutually_exclusive_group(required=True)
    prop.add_argument("--nec", type=int, metavar="N", help="n-existentially closed")
    prop.add_argument("--full", type=int, metavar="R", help="r-full (R <= 5)")
    prop.add_argument("--max-ec", type=int, metavar="CAP", help="largest n <= CAP with n-e.c.")
    prop.add_argument("--srg", action="store_true", help="strongly regular parameters")
    prop.add_argument("--2ec", dest="two_ec", action="store_true", help="2-e.c. via the SRG characterization")
    k.add_argument("--anchor", type=int, help="with --full, require copies through this vertex")
    k.add_argument("--jobs", type=int, help="worker processes (default $NECGRAPH_JOBS or 1)")
    k.add_argument("--labels", help="labels file to annotate witnesses")
    k.add_argument("--format", choices=("text", "kv"), default="text")
    k.set_defaults(func=cmd_check)

    s = sub.add_parser("screen", help="apply the parameter bounds over (s,t,alpha) ranges")
    s.add_argument("--s", type=parse_range, required=True, metavar="A..B")
    s.add_argument("--t", type=parse_range, required=True, metavar="A..B")
    s.add_argument("--alpha", type=parse_range, required=True, metavar="A..B")
    s.add_argument("--format", choices=("text", "kv"), default="text")
    s.add_argument("--detail", action="store_true", help="full per-bound table for each triple")
    s.set_defaults(func=cmd_screen)

    r = sub.add_parser("report", help="reproduce the published claims")
    r.add_argument("--criterion", type=int, help="run one criterion (1-8)")
    r.add_argument("--jobs", type=int)
    r.add_argument("--verbose", "-v", action="store_true")
    r.set_defaults(func=cmd_report)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
