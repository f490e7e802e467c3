"""Command-line entry point: stable line-oriented output for every operation.

Exit codes: 0 success, 1 domain error (bad input data, exceptional input,
expectation mismatch), 2 usage error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .constructive import (
    DisconnectedGraphError,
    ExceptionalGraphError,
    isolate_c4,
)
from .extremal import build_b, verify_extremal
from .graphs import Graph, encode_graph6, parse_edge_list, parse_graph6
from .isolation import iota_exact
from .patterns import (
    CYCLE4,
    NINE_VERTEX_EXCEPTIONS,
    classify_exceptional,
    clique,
    cycle,
    family_from_token,
)
from .sweep import SweepFilter, sweep_catalog


class CliError(Exception):
    """Domain-level failure; message goes to stderr, exit code 1."""


def _add_input_args(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--g6", metavar="TEXT", help="inline graph6 record")
    src.add_argument("--file", metavar="PATH", help="file with one graph6 record on the first line")
    src.add_argument("--edges", metavar="PATH",
                     help="edge-list file ('n' then 'u v' lines); '-' reads standard input")


def _load_graph(args) -> Graph:
    try:
        if args.g6 is not None:
            return parse_graph6(args.g6.strip())
        if args.file is not None:
            text = Path(args.file).read_text(encoding="ascii")
            for line in text.splitlines():
                if line.strip():
                    return parse_graph6(line.strip())
            raise CliError(f"{args.file}: no graph6 record found")
        text = sys.stdin.read() if args.edges == "-" else Path(args.edges).read_text()
        return parse_edge_list(text)
    except (ValueError, OSError) as e:
        raise CliError(str(e)) from e


def _family(token: str):
    try:
        return family_from_token(token)
    except ValueError as e:
        raise CliError(str(e)) from e


def _pattern_graph(token: str) -> Graph:
    token = token.lower()
    try:
        if token.startswith("c"):
            return cycle(int(token[1:]))
        if token.startswith("k"):
            return clique(int(token[1:]))
    except ValueError:
        pass
    raise CliError(f"unknown pattern {token!r} (want c<k> or k<k>)")


def cmd_classify(args) -> int:
    g = _load_graph(args)
    print(str(classify_exceptional(g)))
    return 0


def cmd_iota(args) -> int:
    g = _load_graph(args)
    f = _family(args.family)
    cert = iota_exact(g, f, budget=args.budget)
    print(f"size {cert.size}")
    print("witness" + ("".join(f" {v}" for v in cert.set_d) or " -"))
    return 0


def cmd_isolate(args) -> int:
    g = _load_graph(args)
    try:
        result = isolate_c4(g)
    except (DisconnectedGraphError, ExceptionalGraphError) as e:
        raise CliError(str(e)) from e
    cert = result.certificate
    print(f"size {cert.size}")
    print(f"bound {cert.bound}")
    print("witness" + ("".join(f" {v}" for v in cert.set_d) or " -"))
    print(f"verified {'yes' if cert.verified else 'no'}")
    if args.trace:
        for step in result.trace.steps:
            chosen = ",".join(map(str, step.chosen)) or "-"
            parts = ",".join(map(str, step.parts)) or "-"
            print(f"step {step.rule} chose={chosen} parts={parts}")
    return 0


def cmd_construct_b(args) -> int:
    pattern = _pattern_graph(args.pattern)
    try:
        g = build_b(args.n, pattern)
    except ValueError as e:
        raise CliError(str(e)) from e
    print(encode_graph6(g))
    return 0


def cmd_sweep(args) -> int:
    filt = SweepFilter(
        require_connected=args.connected,
        min_degree=args.min_deg,
        max_degree=args.max_deg,
        vertex_count=args.vertex_count,
    )
    f = _family(args.family)
    if args.bound != "floor5":
        try:
            int(args.bound)
        except ValueError:
            raise CliError(f"bound must be 'floor5' or an integer, got {args.bound!r}")
    try:
        report = sweep_catalog(args.catalog, f, filt, bound_rule=args.bound,
                               workers=args.workers)
    except (ValueError, OSError) as e:
        raise CliError(str(e)) from e
    sys.stdout.write(report.render())
    if args.expect is not None:
        try:
            expected = sorted(
                line.strip() for line in Path(args.expect).read_text().splitlines()
                if line.strip()
            )
        except OSError as e:
            raise CliError(str(e)) from e
        got = sorted(v.graph6 for v in report.violations)
        if got != expected:
            print("expectation MISMATCH", file=sys.stderr)
            return 1
        print("expectation ok")
    return 0


def cmd_selftest(args) -> int:
    failures = 0
    checks = 0

    def check(ok: bool) -> None:
        nonlocal failures, checks
        checks += 1
        if not ok:
            failures += 1

    from .constructive import p3_or_k3_witness
    from .patterns import C4_FAMILY, DIAMOND, K4

    # exceptional values: 1 for the 4-vertex graphs, 2 for the 9-vertex ones
    for g in (CYCLE4, DIAMOND, K4):
        check(iota_exact(g, C4_FAMILY).size == 1)
    for g in NINE_VERTEX_EXCEPTIONS:
        check(iota_exact(g, C4_FAMILY).size == 2)
    print(f"exceptional-values {9 - failures}/9")

    # degree profile and witness coverage of the stored nine-vertex graphs
    before = failures
    for i, g in enumerate(NINE_VERTEX_EXCEPTIONS, 1):
        check(g.min_degree() >= 3 and g.max_degree() == 4)
        if i <= 4:
            check(all(d == 4 for d in g.degrees()))
        else:
            deg3 = [v for v in range(9) if g.degree(v) == 3]
            check(all(not g.has_edge(u, w) for u in deg3 for w in deg3 if u < w))
    print(f"degree-profile {'ok' if failures == before else 'FAIL'}")

    before = failures
    pairs = 0
    for g in NINE_VERTEX_EXCEPTIONS:
        for v in range(9):
            try:
                p3_or_k3_witness(g, v)
                pairs += 1
            except Exception:
                failures += 1
            checks += 1
    print(f"witness-pairs {pairs}/54")

    before = failures
    for n in range(1, 21):
        check(verify_extremal(n))
    print(f"extremal-1-20 {'ok' if failures == before else 'FAIL'}")

    print(f"selftest {'PASS' if failures == 0 else 'FAIL'} ({checks - failures}/{checks})")
    return 0 if failures == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="graphisol",
        description="4-cycle isolation numbers, certified floor(n/5) sets, catalog sweeps",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="name the exceptional class of a graph, if any")
    _add_input_args(p)
    p.set_defaults(fn=cmd_classify)

    p = sub.add_parser("iota", help="exact isolation number with witness")
    _add_input_args(p)
    p.add_argument("--family", default="c4",
                   help="c4 | cycles | ck:<k> | clique:<k> | diamond (default c4)")
    p.add_argument("--budget", type=int, default=None, help="subset-test budget")
    p.set_defaults(fn=cmd_iota)

    p = sub.add_parser("isolate", help="certified 4-cycle isolating set within floor(n/5)")
    _add_input_args(p)
    p.add_argument("--trace", action="store_true", help="print the rule applications")
    p.set_defaults(fn=cmd_isolate)

    p = sub.add_parser("construct-b", help="emit the extremal construction as graph6")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--pattern", default="c4", help="c<k> or k<k> (default c4)")
    p.set_defaults(fn=cmd_construct_b)

    p = sub.add_parser("sweep", help="scan a graph6 catalog for bound violators")
    p.add_argument("--catalog", required=True)
    p.add_argument("--family", default="c4")
    p.add_argument("--min-deg", type=int, default=None)
    p.add_argument("--max-deg", type=int, default=None)
    p.add_argument("--connected", action="store_true")
    p.add_argument("--vertex-count", type=int, default=None)
    p.add_argument("--bound", default="floor5", help="floor5 or an explicit integer")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--expect", default=None,
                   help="file of expected violator graph6 lines; exit 1 on mismatch")
    p.set_defaults(fn=cmd_sweep)

    p = sub.add_parser("selftest", help="run the built-in verification suite")
    p.set_defaults(fn=cmd_selftest)

    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.fn(args)
    except CliError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
