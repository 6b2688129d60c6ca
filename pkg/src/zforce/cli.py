"""Command line front door.

Subcommands: closure, exact, heuristic, bounds, verify, gen, expect.
Single results print as pretty JSON, streams as JSON lines; --quiet
prints bare numbers for scripting.  Exit codes are part of the stable
interface: 0 ok, 2 usage, 3 closure fell short, 4 budget exhausted,
5 proven-bound violation.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from . import codec
from .bounds import bounds_report, conjecture_third_holds
from .exact import zero_forcing_number
from .families import family_names, generate
from .forcing import closure
from .graph import Graph, bit_list, is_connected, mask_of
from .heuristics import expected_size, greedy_ratio_zfs, random_zfs, subcubic_girth5_zfs

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_NOT_FORCING = 3
EXIT_BUDGET = 4
EXIT_VIOLATION = 5


def _fraction_json(f: Fraction) -> dict:
    return {"num": f.numerator, "den": f.denominator, "decimal": float(f)}


def _emit(payload: dict) -> None:
    json.dump(payload, sys.stdout, indent=2)
    sys.stdout.write("\n")


def _read_source(args: argparse.Namespace) -> str:
    if args.g6 is not None:
        return args.g6
    if args.source is None or args.source == "-":
        return sys.stdin.read()
    with open(args.source, encoding="ascii") as handle:
        return handle.read()


def _load_graph(args: argparse.Namespace, parser: argparse.ArgumentParser) -> Graph:
    text = _read_source(args)
    stripped = text.strip()
    if not stripped:
        parser.error("empty graph input")
    try:
        if codec.looks_like_graph6(stripped.splitlines()[0]):
            return codec.parse_graph6(stripped.splitlines()[0])
        return codec.parse_edge_list(stripped)
    except ValueError as exc:
        parser.error(str(exc))
    raise AssertionError  # pragma: no cover


def _parse_set(spec: str, g: Graph, parser: argparse.ArgumentParser) -> int:
    try:
        verts = [int(tok) for tok in spec.split(",") if tok.strip() != ""]
    except ValueError:
        parser.error(f"bad vertex set {spec!r}; expected comma-separated indices")
    if any(not 0 <= v < g.n for v in verts):
        parser.error(f"vertex set {spec!r} out of range for n={g.n}")
    return mask_of(verts)


def _add_source_args(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("source", nargs="?", default=None,
                     help="graph file (graph6 or edge list); '-' or omitted reads stdin")
    sub.add_argument("--g6", default=None, help="inline graph6 string")


def _add_quiet(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--quiet", action="store_true",
                     help="print a bare number instead of JSON")


def _cmd_closure(args, parser) -> int:
    g = _load_graph(args, parser)
    z = _parse_set(args.set, g, parser)
    trace = closure(g, z)
    complete = trace.closure == g.full_mask
    if args.quiet:
        print(trace.closure.bit_count())
    else:
        payload = trace.to_json_dict()
        payload["complete"] = complete
        _emit(payload)
    return EXIT_OK if complete else EXIT_NOT_FORCING


def _cmd_exact(args, parser) -> int:
    g = _load_graph(args, parser)
    res = zero_forcing_number(g, args.budget)
    if args.quiet:
        print(res.value if res.complete else f"{res.lower}:{res.upper}")
    else:
        _emit({
            "value": res.value,
            "witness": None if res.witness is None else bit_list(res.witness),
            "nodes_explored": res.nodes_explored,
            "complete": res.complete,
            "lower": res.lower,
            "upper": res.upper,
        })
    return EXIT_OK if res.complete else EXIT_BUDGET


def _cmd_heuristic(args, parser) -> int:
    g = _load_graph(args, parser)
    try:
        if args.method == "greedy":
            res = greedy_ratio_zfs(g)
        elif args.method == "subcubic":
            res = subcubic_girth5_zfs(g)
        else:
            res = random_zfs(g, args.trials, args.seed)
    except ValueError as exc:
        parser.error(str(exc))
    if args.quiet:
        print(res.size)
    else:
        payload = res.to_json_dict()
        payload["claim_held"] = res.size <= res.bound_claim
        _emit(payload)
    return EXIT_OK


def _cmd_bounds(args, parser) -> int:
    g = _load_graph(args, parser)
    report = bounds_report(g, with_exact=args.exact, budget=args.budget)
    if args.quiet:
        print(len(report.violations))
    else:
        _emit(report.to_json_dict())
    return EXIT_VIOLATION if report.violations else EXIT_OK


def _verify_line(item: tuple[int, str], exact_limit: int, hunt: bool) -> dict:
    lineno, line = item
    try:
        g = codec.parse_graph6(line)
    except ValueError as exc:
        return {"line": lineno, "graph6": line, "error": str(exc)}
    with_exact = g.n <= exact_limit
    report = bounds_report(g, with_exact=with_exact)
    record = {
        "line": lineno,
        "graph6": line,
        "n": g.n,
        "violations": list(report.violations),
        "conjecture_flags": list(report.conjecture_flags),
    }
    if with_exact and report.exact is not None:
        record["z"] = report.exact.value
    if hunt and with_exact and report.exact is not None and report.exact.complete:
        if is_connected(g) and g.max_degree() == 3 and \
                not conjecture_third_holds(g.n, report.exact.value):
            record["conjecture_counterexample"] = True
    return record


def _cmd_verify(args, parser) -> int:
    if args.g6 is not None:
        lines = [args.g6]
    else:
        text = sys.stdin.read() if args.source in (None, "-") else open(args.source, encoding="ascii").read()
        lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    items = list(enumerate(lines, start=1))
    threads = max(1, int(os.environ.get("ZFORCE_THREADS", "1")))
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            records = list(pool.map(
                lambda it: _verify_line(it, args.exact_limit, args.hunt_conjecture),
                items))
    else:
        records = [_verify_line(it, args.exact_limit, args.hunt_conjecture)
                   for it in items]
    violations = 0
    counterexamples = 0
    errors = 0
    for record in records:  # records re-emitted in input order
        violations += len(record.get("violations", ()))
        errors += 1 if "error" in record else 0
        if record.get("conjecture_counterexample"):
            counterexamples += 1
            print("CONJECTURE COUNTEREXAMPLE:", record["graph6"], file=sys.stderr)
        print(json.dumps(record))
    summary = {
        "summary": True,
        "graphs": len(records),
        "violations": violations,
        "parse_errors": errors,
        "conjecture_counterexamples": counterexamples,
    }
    print(json.dumps(summary))
    if violations:
        return EXIT_VIOLATION
    return EXIT_USAGE if errors else EXIT_OK


def _cmd_gen(args, parser) -> int:
    try:
        g = generate(args.family, *args.params)
    except ValueError as exc:
        parser.error(str(exc))
    if args.format == "graph6":
        print(codec.to_graph6(g))
    elif args.format == "edges":
        sys.stdout.write(codec.to_edge_list(g))
    else:
        sys.stdout.write(codec.to_dot(g))
    return EXIT_OK


def _cmd_expect(args, parser) -> int:
    g = _load_graph(args, parser)
    try:
        value = expected_size(g)
    except ValueError as exc:
        parser.error(str(exc))
    if args.quiet:
        print(float(value))
    else:
        _emit(_fraction_json(value))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zforce",
        description="Zero forcing toolkit: simulate, solve exactly, "
                    "construct, and verify bounds over graph6 streams.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("closure", help="run the forcing process from a set")
    _add_source_args(p)
    p.add_argument("--set", required=True, help="comma-separated vertex indices")
    _add_quiet(p)
    p.set_defaults(func=_cmd_closure)

    p = sub.add_parser("exact", help="exact zero forcing number with witness")
    _add_source_args(p)
    p.add_argument("--budget", type=int, default=None,
                   help="cap on closure invocations")
    _add_quiet(p)
    p.set_defaults(func=_cmd_exact)

    p = sub.add_parser("heuristic", help="constructive zero forcing sets")
    _add_source_args(p)
    p.add_argument("--method", choices=["greedy", "subcubic", "random"],
                   default="greedy")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    _add_quiet(p)
    p.set_defaults(func=_cmd_heuristic)

    p = sub.add_parser("bounds", help="evaluate the full bound catalog")
    _add_source_args(p)
    p.add_argument("--exact", action="store_true",
                   help="attach the exact value and check the sandwich")
    p.add_argument("--budget", type=int, default=None)
    _add_quiet(p)
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("verify", help="batch-check a graph6 stream")
    _add_source_args(p)
    p.add_argument("--exact-limit", type=int, default=12,
                   help="solve exactly up to this order (default 12)")
    p.add_argument("--hunt-conjecture", action="store_true",
                   help="flag connected subcubic graphs with Z > n/3 + 2")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("gen", help="emit a named family member")
    p.add_argument("family", choices=family_names())
    p.add_argument("params", nargs="*", type=int)
    p.add_argument("--format", choices=["graph6", "edges", "dot"],
                   default="graph6")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("expect", help="exact expected random-order set size")
    _add_source_args(p)
    _add_quiet(p)
    p.set_defaults(func=_cmd_expect)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args, parser)


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
