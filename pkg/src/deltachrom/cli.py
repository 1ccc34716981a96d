"""Command-line front end.

Subcommands:

  chi-delta SPEC         closed-form value (when covered), exact solver
                         value, and the agreement verdict
  export SPEC            byte-stable JSON or DOT of the graph (--delta
                         for its delta-complement)
  structure SPEC...      edge counts of the product decomposition and
                         the equality verdict (--emit-s dumps S as JSON)
  construct ID PARAMS    one of the explicit colorings, as JSON or DOT
                         (--check re-verifies properness and the clique)
  verify ID|all          theorem checks as a table, CSV or pretty

Graph terms use the family grammar (P7, C5, K4, N3, S1,4, W6, M(3,4),
J(K1,C5), X(P6,P7)); an argument of the form @file.json loads a raw
graph from the JSON edge-list format instead.

Exit codes: 0 ok, 1 check failure, 2 usage error, 3 timeout/inexact.
The DELTACHROM_TIMEOUT environment variable overrides the default
60-second solver budget.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .bounds import formula_chi_delta
from .chromatic import chi_delta, is_proper
from .constructions import (
    ConstructionResult,
    degree_diff_product_coloring,
    join_p3_coloring,
    path_path_coloring,
    star_path_coloring,
    star_star_coloring,
)
from .families import complete_graph, generate, join, parse_spec
from .graphs import (
    cartesian_product,
    delta_complement,
    from_json,
    to_dot,
    to_json,
)
from .structure import delta_of_product, equality_holds
from .verification import DEFAULT_SEED, check_ids, run_check

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_INEXACT = 3


def _default_timeout() -> float:
    raw = os.environ.get("DELTACHROM_TIMEOUT")
    return float(raw) if raw else 60.0


def _load_graph(term: str):
    if term.startswith("@"):
        return from_json(Path(term[1:]).read_text()), None
    spec = parse_spec(term)
    return generate(spec), spec


def _parse_range(text: str) -> tuple[int, int]:
    if ".." in text:
        lo, hi = text.split("..", 1)
        return int(lo), int(hi)
    v = int(text)
    return v, v


def cmd_chi_delta(args: argparse.Namespace) -> int:
    graph, spec = _load_graph(args.spec)
    formula = formula_chi_delta(spec) if spec is not None else None
    result = chi_delta(graph, timeout=args.timeout)
    agree = None
    if formula is not None and result.exact:
        agree = result.chi == formula.value
    off = 1 if args.one_based else 0
    if args.fmt == "json":
        payload = {
            "spec": args.spec,
            "formula": formula.value if formula else None,
            "formula_note": formula.note if formula else None,
            "solver": result.to_json_dict(),
            "agree": agree,
        }
        print(json.dumps(payload, separators=(",", ":")))
    else:
        if formula is None:
            print("formula: not covered")
        else:
            print(f"formula: {formula.value} ({formula.family})")
            if formula.note:
                print(f"note: {formula.note}")
        if result.exact:
            print(f"solver: {result.chi} ({result.method}, {int(result.elapsed * 1000)} ms)")
            witness = [c + off for c in result.witness.colors]
            print(f"witness: {witness}")
        else:
            print(f"solver: inexact, bracket [{result.lower}, {result.upper}]")
        if agree is not None:
            print(f"agreement: {'ok' if agree else 'MISMATCH'}")
    if not result.exact:
        return EXIT_INEXACT
    if agree is False:
        return EXIT_CHECK_FAILED
    return EXIT_OK


def cmd_export(args: argparse.Namespace) -> int:
    graph, _ = _load_graph(args.spec)
    if args.delta:
        graph = delta_complement(graph)
    if args.fmt == "json":
        print(to_json(graph))
    else:
        print(to_dot(graph, one_based=args.one_based), end="")
    return EXIT_OK


def cmd_structure(args: argparse.Namespace) -> int:
    factors = [_load_graph(term)[0] for term in args.specs]
    dec = delta_of_product(factors, max_vertices=args.max_vertices)
    print(f"|E(product)|           = {dec.product.edge_count()}")
    print(f"|E(delta of product)|  = {dec.delta_of_product.edge_count()}")
    print(f"|E(product of deltas)| = {dec.product_of_deltas.edge_count()}")
    print(f"|S|                    = {len(dec.extra_edges)}")
    print(f"equality: {equality_holds(factors)}")
    if args.emit_s:
        print(json.dumps([list(e) for e in dec.extra_edges], separators=(",", ":")))
    return EXIT_OK


def _construction_result(args: argparse.Namespace):
    name = args.construction
    params = args.params
    if name == "star-star":
        m, n = (int(p) for p in params)
        return star_star_coloring(m, n)
    if name == "star-path":
        m, n = (int(p) for p in params)
        return star_path_coloring(m, n)
    if name == "path-path":
        n, k = (int(p) for p in params)
        return path_path_coloring(n, k)
    if name == "join-p3":
        (term,) = params
        h, _ = _load_graph(term)
        ch = chi_delta(h).witness
        coloring = join_p3_coloring(h, ch)
        product, index = cartesian_product(
            [join(complete_graph(1), h), generate(parse_spec("P3"))]
        )
        return ConstructionResult(delta_complement(product), index, coloring, ())
    if name == "degree-diff":
        term_g, term_h = params
        g, _ = _load_graph(term_g)
        h, _ = _load_graph(term_h)
        c0 = chi_delta(g).witness
        coloring = degree_diff_product_coloring(g, c0, h)
        product, index = cartesian_product([g, h])
        return ConstructionResult(delta_complement(product), index, coloring, ())
    raise ValueError(f"unknown construction {name!r}")


def cmd_construct(args: argparse.Namespace) -> int:
    result = _construction_result(args)
    off = 1 if args.one_based else 0
    checked = None
    if args.check:
        proper = is_proper(result.graph, result.coloring)
        clique_ok = all(
            result.graph.has_edge(a, b)
            for i, a in enumerate(result.clique)
            for b in result.clique[i + 1 :]
        )
        sizes_match = (
            not result.clique
            or len(result.clique) == result.coloring.colors_used
        )
        checked = proper and clique_ok and sizes_match
    if args.fmt == "dot":
        print(to_dot(result.graph, result.coloring.colors, one_based=args.one_based), end="")
    else:
        payload = {
            "construction": args.construction,
            "params": [int(p) if p.isdigit() else p for p in args.params],
            "palette": result.coloring.palette_size,
            "colors_used": result.coloring.colors_used,
            "colors": [c + off for c in result.coloring.colors],
            "clique": list(result.clique),
        }
        if checked is not None:
            payload["check"] = "pass" if checked else "fail"
        print(json.dumps(payload, separators=(",", ":")))
    if checked is False:
        return EXIT_CHECK_FAILED
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    opts: dict = {"seed": args.seed, "timeout": args.timeout}
    if args.n:
        opts["n"] = _parse_range(args.n)
    if args.k:
        opts["k"] = _parse_range(args.k)
    if args.m:
        opts["m"] = _parse_range(args.m)
    if args.trials is not None:
        opts["trials"] = args.trials
    if args.max is not None:
        opts["max"] = args.max
    rows = run_check(args.check, opts)
    if args.fmt == "csv":
        print("check_id,params,expected,computed,status,seconds")
        for r in rows:
            params = json.dumps(r.params, separators=(",", ":")).replace('"', "'")
            print(f'{r.check_id},"{params}","{r.expected}","{r.computed}",{r.status},{r.seconds:.3f}')
    else:
        width = max((len(r.check_id) for r in rows), default=8)
        for r in rows:
            params = json.dumps(r.params, separators=(",", ":"))
            print(f"{r.status.upper():4} {r.check_id:<{width}} {params} "
                  f"expected={r.expected} computed={r.computed}")
        passed = sum(r.status == "pass" for r in rows)
        failed = sum(r.status == "fail" for r in rows)
        skipped = sum(r.status == "skip" for r in rows)
        print(f"-- {passed} passed, {failed} failed, {skipped} skipped")
    return EXIT_CHECK_FAILED if any(r.status == "fail" for r in rows) else EXIT_OK


GRAMMAR_HELP = """\
family terms:
  P7 C5 K4 N3 W6    path / cycle / complete / edgeless / wheel
  S1,4              star with 4 pendants
  M(3,4)            windmill: hub joined to 3 disjoint copies of K4
  J(A,B)            join of two terms
  X(A,B[,C...])     Cartesian product of two or more terms
  @file.json        raw graph from the JSON edge-list format
"""


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="deltachrom",
        description="delta-complements, exact delta-chromatic numbers, theorem checks",
        epilog=GRAMMAR_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("chi-delta", help="exact delta-chromatic number of a family term")
    p.add_argument("spec", help="family term, e.g. C9 or X(S1,3,P3), or @graph.json")
    p.add_argument("--timeout", type=float, default=_default_timeout())
    p.add_argument("--fmt", choices=("pretty", "json"), default="pretty")
    p.add_argument("--one-based", action="store_true")
    p.set_defaults(func=cmd_chi_delta)

    p = sub.add_parser("export", help="emit a graph as byte-stable JSON or DOT")
    p.add_argument("spec")
    p.add_argument("--delta", action="store_true", help="export the delta-complement")
    p.add_argument("--fmt", choices=("json", "dot"), default="json")
    p.add_argument("--one-based", action="store_true")
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("structure", help="product decomposition edge counts")
    p.add_argument("specs", nargs="+")
    p.add_argument("--emit-s", action="store_true", help="dump S as a JSON edge list")
    p.add_argument("--max-vertices", type=int, default=10_000)
    p.set_defaults(func=cmd_structure)

    p = sub.add_parser("construct", help="run one of the explicit colorings")
    p.add_argument(
        "construction",
        choices=("star-star", "star-path", "path-path", "join-p3", "degree-diff"),
    )
    p.add_argument("params", nargs="+")
    p.add_argument("--check", action="store_true",
                   help="re-verify properness and the clique certificate")
    p.add_argument("--fmt", choices=("json", "dot"), default="json")
    p.add_argument("--one-based", action="store_true")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="run theorem checks and print a table")
    p.add_argument("check", choices=check_ids() + ["all"])
    p.add_argument("--n", help="range A..B for the first parameter")
    p.add_argument("--k", help="range A..B for the second parameter")
    p.add_argument("--m", help="range A..B for the pendant count")
    p.add_argument("--trials", type=int)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--max", type=int)
    p.add_argument("--timeout", type=float, default=_default_timeout())
    p.add_argument("--fmt", choices=("pretty", "csv"), default="pretty")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except (ValueError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
