"""``floodpoly`` command-line interface.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 input too
large for exhaustive enumeration.
"""

from __future__ import annotations

import argparse
import json
import sys

from floodpoly import analysis, cascade, enumeration, formulas
from floodpoly.errors import FloodPolyError, TooLarge
from floodpoly.families import FAMILIES, FamilySpec, parse_family_spec
from floodpoly.graph import Graph, format_set, members, nonisomorphic_graphs, popcount
from floodpoly.graphio import format_edge_list, read_edge_list, read_graph6, to_graph6
from floodpoly.poly import IntPolynomial

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_TOO_LARGE = 0, 1, 2, 3


class UsageError(Exception):
    pass


def resolve_graph(arg: str) -> tuple[Graph, FamilySpec | None]:
    """``@path`` reads an edge-list file; anything else is a family spec."""
    if arg.startswith("@"):
        return read_edge_list(arg[1:]), None
    spec = parse_family_spec(arg)
    return spec.build(), spec


def _emit_json(obj) -> None:
    print(json.dumps(obj, indent=2))


def _one_indexed(mask: int) -> list[int]:
    return [v + 1 for v in members(mask)]


def _facts_lines(facts: analysis.PolyFacts) -> list[str]:
    return [
        f"n = {facts.n}",
        f"|F(G)| = F(1) = {facts.flood_count}",
        f"leaves+isolated = {facts.leaves_plus_isolated}",
        f"triggers = {facts.trigger_count}",
        f"free vertices <= {facts.free_vertex_upper_bound}",
    ]


def cmd_compute(args) -> int:
    g, _ = resolve_graph(args.graph)
    want_table = args.minimal or args.free
    if want_table:
        table = enumeration.flood_table(g, workers=args.threads, cap=args.cap)
        p = table.polynomial()
        minimal = table.minimal_sets()
    else:
        p = enumeration.flood_polynomial(g, workers=args.threads, cap=args.cap)
        minimal = []
    facts = analysis.facts_from_polynomial(p) if p.degree >= 1 else None
    ok = True
    free = None
    if facts is not None:
        ok = (
            facts.leaves_plus_isolated == popcount(g.leaves_and_isolated())
            and facts.trigger_count == len(g.triggers())
        )
    if args.free:
        used = 0
        for s in minimal:
            used |= s
        free = g.full & ~used
        if facts is not None:
            ok = ok and popcount(free) <= facts.free_vertex_upper_bound
    verdict = "PASS" if ok else "FAIL"
    if args.json:
        out = {"graph": args.graph, "polynomial": p.to_json()}
        out["facts"] = facts.as_dict() if facts else None
        if args.minimal:
            out["minimal_sets"] = [_one_indexed(s) for s in minimal]
        if args.free:
            out["free_vertices"] = _one_indexed(free)
        out["verdict"] = verdict
        _emit_json(out)
    else:
        print(f"F(x) = {p}")
        if facts:
            for line in _facts_lines(facts):
                print(line)
        if args.minimal:
            print(f"minimal flooding sets ({len(minimal)}):")
            for s in minimal:
                print(f"  {format_set(s)}")
        if args.free:
            print(f"free vertices ({popcount(free)}): {format_set(free)}")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_formula(args) -> int:
    spec = parse_family_spec(args.spec)
    p = formulas.spec_formula(spec)
    if p is None:
        raise UsageError(f"no closed formula known for {spec}")
    if args.json:
        _emit_json({"spec": str(spec), "polynomial": p.to_json()})
    else:
        print(f"F(x) = {p}")
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.spec.startswith("@"):
        g, spec = read_edge_list(args.spec[1:]), None
    else:
        spec = parse_family_spec(args.spec)
        g = spec.build()
    report = analysis.verify_graph(g, workers=args.threads, cap=args.cap)
    expected = formulas.spec_formula(spec) if spec is not None else None
    checks = []
    if expected is not None:
        checks.append(("formula == brute force", expected == report.polynomial))
    checks += [(law.name, law.passed) for law in report.laws]
    ok = all(passed for _, passed in checks)
    if args.json:
        _emit_json(
            {
                "spec": args.spec,
                "polynomial": report.polynomial.to_json(),
                "formula": expected.to_json() if expected is not None else None,
                "facts": report.facts.as_dict(),
                "checks": {name: "PASS" if passed else "FAIL" for name, passed in checks},
                "verdict": "PASS" if ok else "FAIL",
            }
        )
    else:
        print(f"brute force: {report.polynomial}")
        if expected is not None:
            print(f"formula:     {expected}")
        else:
            print("formula:     none known")
        for name, passed in checks:
            print(f"{name}: {'PASS' if passed else 'FAIL'}")
    return EXIT_OK if ok else EXIT_FAIL


def _parse_seed(text: str, n: int) -> int:
    try:
        verts = [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise UsageError(f"--seed expects comma-separated vertex numbers, got {text!r}") from None
    bad = [v for v in verts if not 1 <= v <= n]
    if bad:
        raise UsageError(f"seed vertices {bad} outside 1..{n}")
    mask = 0
    for v in verts:
        mask |= 1 << (v - 1)
    return mask


def cmd_cascade(args) -> int:
    g, _ = resolve_graph(args.graph)
    tr = cascade.trace(g, _parse_seed(args.seed, g.n))
    flooded = tr.final == g.full
    if args.json:
        _emit_json(
            {
                "steps": [_one_indexed(s) for s in tr.steps],
                "converged_at": tr.converged_at,
                "verdict": "FLOODS" if flooded else "STUCK",
                "unflooded": _one_indexed(g.full & ~tr.final),
            }
        )
    else:
        for i, s in enumerate(tr.steps):
            print(f"C_{i} = {format_set(s)}")
        if flooded:
            print("FLOODS")
        else:
            print(f"STUCK unflooded {format_set(g.full & ~tr.final)}")
    return EXIT_OK


def cmd_facts(args) -> int:
    p = IntPolynomial.parse(args.polynomial)
    facts = analysis.facts_from_polynomial(p)
    if args.json:
        _emit_json({"polynomial": p.to_json(), "facts": facts.as_dict()})
    else:
        print(f"F(x) = {p}")
        for line in _facts_lines(facts):
            print(line)
    return EXIT_OK


def cmd_search(args) -> int:
    if args.all_graphs is not None:
        graphs = nonisomorphic_graphs(args.all_graphs)
        source = f"all graphs on {args.all_graphs} vertices"
    else:
        graphs = read_graph6(args.corpus)
        source = args.corpus
    report = analysis.find_equivalent(graphs, workers=args.threads, cap=args.cap)
    if args.json:
        _emit_json(
            {
                "source": source,
                "graphs_seen": report.graphs_seen,
                "distinct_graphs": report.distinct_graphs,
                "skipped": report.skipped,
                "classes": [
                    {"polynomial": c.polynomial.to_json(), "members": [m.id for m in c.members]}
                    for c in report.classes
                ],
            }
        )
    else:
        print(
            f"{source}: {report.graphs_seen} graphs, {report.distinct_graphs} non-isomorphic, "
            f"{report.skipped} skipped, {len(report.classes)} shared polynomials"
        )
        for c in report.classes:
            print(f"F(x) = {c.polynomial}")
            for m in c.members:
                print(f"  {m.id}")
    return EXIT_OK


def cmd_families(args) -> int:
    if args.spec is None:
        print("families: " + ", ".join(FAMILIES))
        print("grammar:  atom (+ atom)*   e.g. 'path:4 + cycle:4', 'grid:2x4', 'centipede:1,2,2'")
        return EXIT_OK
    spec = parse_family_spec(args.spec)
    g = spec.build()
    if args.graph6:
        print(to_graph6(g))
        return EXIT_OK
    print(f"# {spec}")
    print("# labels: " + " ".join(g.label(v) for v in range(g.n)))
    sys.stdout.write(format_edge_list(g))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="floodpoly", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def engine_flags(p):
        p.add_argument("--threads", type=int, default=None, help="worker count (default: all cores)")
        p.add_argument("--cap", type=int, default=enumeration.DEFAULT_CAP,
                       help="maximum vertex count for brute force")
        p.add_argument("--json", action="store_true")

    p = sub.add_parser("compute", help="brute-force flood polynomial of a graph")
    p.add_argument("graph", help="family spec or @edge-list-file")
    p.add_argument("--minimal", action="store_true", help="list minimal flooding sets")
    p.add_argument("--free", action="store_true", help="list free vertices")
    engine_flags(p)
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("formula", help="closed-form flood polynomial of a family")
    p.add_argument("spec")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_formula)

    p = sub.add_parser("verify", help="compare formula, brute force and polynomial laws")
    p.add_argument("spec", help="family spec or @edge-list-file")
    engine_flags(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("cascade", help="trace the cascade sequence of a seed set")
    p.add_argument("graph")
    p.add_argument("--seed", required=True, help="1-indexed vertices, e.g. 1,4,6")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_cascade)

    p = sub.add_parser("facts", help="graph properties implied by a flood polynomial")
    p.add_argument("polynomial", help='e.g. "x^4 + 4x^3 + 2x^2"')
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_facts)

    p = sub.add_parser("search", help="find non-isomorphic graphs sharing a flood polynomial")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--all-graphs", type=int, metavar="N")
    src.add_argument("--corpus", metavar="FILE.g6")
    engine_flags(p)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("families", help="list families or print a generated graph")
    p.add_argument("spec", nargs="?")
    p.add_argument("--graph6", action="store_true", help="print graph6 instead of an edge list")
    p.set_defaults(func=cmd_families)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except TooLarge as exc:
        print(f"floodpoly: {exc}", file=sys.stderr)
        return EXIT_TOO_LARGE
    except (FloodPolyError, UsageError, OSError) as exc:
        print(f"floodpoly: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
