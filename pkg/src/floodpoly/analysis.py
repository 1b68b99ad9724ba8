"""Reading graph structure back out of flood polynomials."""

from __future__ import annotations

import logging
from collections.abc import Iterable
from dataclasses import dataclass, field
from math import comb

from floodpoly.enumeration import DEFAULT_CAP, flood_polynomial, flood_table
from floodpoly.errors import MalformedPolynomial, TooLarge
from floodpoly.graph import Graph, popcount
from floodpoly.graphio import to_graph6
from floodpoly.poly import IntPolynomial

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class PolyFacts:
    n: int
    flood_count: int
    leaves_plus_isolated: int
    trigger_count: int
    free_vertex_upper_bound: int
    # exposed raw; no structural reading of it is known
    c_n_minus_3: int

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "flood_count": str(self.flood_count),
            "leaves_plus_isolated": self.leaves_plus_isolated,
            "trigger_count": self.trigger_count,
            "free_vertex_upper_bound": self.free_vertex_upper_bound,
            "c_n_minus_3": str(self.c_n_minus_3),
        }


def facts_from_polynomial(p: IntPolynomial) -> PolyFacts:
    """Vertex, leaf, trigger and free-vertex data implied by a flood polynomial."""
    n = p.degree
    if n < 1:
        raise MalformedPolynomial(f"flood polynomial must have degree >= 1, got {p}")
    if p.coeff(n) != 1:
        raise MalformedPolynomial(f"flood polynomial must be monic, got {p}")
    if any(c < 0 for c in p.coeffs):
        raise MalformedPolynomial(f"negative coefficient in {p}")
    if p.coeff(0) not in (0, 1):
        raise MalformedPolynomial(f"constant term must be 0 or 1, got {p.coeff(0)}")
    leaves = n - p.coeff(n - 1)
    triggers = comb(n, 2) - (n - 1) * leaves + comb(leaves, 2) - p.coeff(n - 2)
    if leaves < 0 or triggers < 0:
        raise MalformedPolynomial(f"{p} implies a negative leaf or trigger count")
    return PolyFacts(
        n=n,
        flood_count=p(1),
        leaves_plus_isolated=leaves,
        trigger_count=triggers,
        free_vertex_upper_bound=p.multiplicity_x_plus_1(),
        c_n_minus_3=p.coeff(n - 3),
    )


@dataclass(frozen=True)
class LawResult:
    name: str
    passed: bool
    detail: str


@dataclass(frozen=True)
class GraphReport:
    polynomial: IntPolynomial
    facts: PolyFacts
    laws: tuple[LawResult, ...]

    @property
    def passed(self) -> bool:
        return all(law.passed for law in self.laws)


def verify_graph(g: Graph, *, workers: int | None = None, cap: int = DEFAULT_CAP) -> GraphReport:
    """Check every polynomial-determined invariant against the graph itself.

    Enumerates all ``2^n`` subsets (no leaf pre-filter) so the leaf law is
    tested rather than assumed.
    """
    table = flood_table(g, workers=workers, cap=cap, prefilter=False)
    p = table.polynomial()
    facts = facts_from_polynomial(p)
    n = g.n
    laws = []

    def law(name: str, ok: bool, detail: str) -> None:
        laws.append(LawResult(name, bool(ok), detail))

    law("monic degree n", p.degree == n and p.coeff(n) == 1, f"degree {p.degree}, n {n}")
    bad = [k for k in range(n + 1) if not 0 <= p.coeff(k) <= comb(n, k)]
    law("coefficient bounds", not bad, f"violations at k={bad}" if bad else "0 <= c_k <= C(n,k)")
    count = int(table.floods.sum())
    law("flood count", count == facts.flood_count, f"|F(G)| = {count}, F(1) = {facts.flood_count}")
    leaves = popcount(g.leaves_and_isolated())
    law(
        "leaf law",
        leaves == facts.leaves_plus_isolated,
        f"graph {leaves}, polynomial {facts.leaves_plus_isolated}",
    )
    trig = len(g.triggers())
    law("trigger law", trig == facts.trigger_count, f"graph {trig}, polynomial {facts.trigger_count}")
    used = 0
    for s in table.minimal_sets():
        used |= s
    free = popcount(g.full & ~used)
    law(
        "free-vertex bound",
        free <= facts.free_vertex_upper_bound,
        f"{free} free <= (x+1)^{facts.free_vertex_upper_bound}",
    )
    return GraphReport(p, facts, tuple(laws))


@dataclass(frozen=True)
class GraphRef:
    id: str
    name: str


@dataclass(frozen=True)
class EquivalenceClass:
    polynomial: IntPolynomial
    members: tuple[GraphRef, ...]


@dataclass
class EquivalenceReport:
    classes: list[EquivalenceClass] = field(default_factory=list)
    graphs_seen: int = 0
    distinct_graphs: int = 0
    skipped: int = 0


def find_equivalent(
    graphs: Iterable[Graph | tuple[str, Graph]],
    *,
    workers: int | None = None,
    cap: int = DEFAULT_CAP,
) -> EquivalenceReport:
    """Group non-isomorphic graphs by exact flood polynomial.

    Items may be bare graphs or ``(name, graph)`` pairs.  Graphs beyond the
    enumeration or canonical-form caps are skipped and counted.  Member ids
    are graph6 strings of the canonical relabelling.
    """
    report = EquivalenceReport()
    seen: dict[bytes, GraphRef] = {}
    by_poly: dict[tuple[int, ...], list[GraphRef]] = {}
    for item in graphs:
        name, g = item if isinstance(item, tuple) else (None, item)
        report.graphs_seen += 1
        try:
            key = g.canonical_form()
            if key in seen:
                continue
            canon = g.canonical_graph()
            p = flood_polynomial(g, workers=workers, cap=cap)
        except TooLarge as exc:
            report.skipped += 1
            log.warning("skipping graph %s: %s", name or to_graph6(g), exc)
            continue
        ref = GraphRef(to_graph6(canon), name or to_graph6(canon))
        seen[key] = ref
        by_poly.setdefault(p.coeffs, []).append(ref)
    report.distinct_graphs = len(seen)
    for coeffs in sorted(by_poly, key=lambda c: (len(c), c)):
        refs = by_poly[coeffs]
        if len(refs) >= 2:
            report.classes.append(
                EquivalenceClass(IntPolynomial(coeffs), tuple(sorted(refs, key=lambda r: r.id)))
            )
    return report
