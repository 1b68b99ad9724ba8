"""Threshold-two flooding dynamics on a single cascade set."""

from __future__ import annotations

from dataclasses import dataclass

from floodpoly.graph import Graph, VertexSet, members


@dataclass(frozen=True)
class CascadeTrace:
    """The cascade sequence ``C_0, ..., C_k`` with ``C_k`` a fixed point."""

    steps: tuple[VertexSet, ...]

    @property
    def converged_at(self) -> int:
        return len(self.steps) - 1

    @property
    def final(self) -> VertexSet:
        return self.steps[-1]


def cascade_step(g: Graph, c: VertexSet) -> VertexSet:
    """Add every vertex with at least two neighbours in ``c``."""
    g.check_set(c)
    out = c
    for x in members(g.full & ~c):
        hit = g.adj[x] & c
        if hit & (hit - 1):
            out |= 1 << x
    return out


def _closure(adj: tuple[int, ...], c: VertexSet) -> VertexSet:
    # worklist over unflooded neighbours of newly flooded vertices
    flooded = c
    fresh = c
    while fresh:
        cand = 0
        for v in members(fresh):
            cand |= adj[v]
        cand &= ~flooded
        fresh = 0
        for x in members(cand):
            hit = adj[x] & flooded
            if hit & (hit - 1):
                fresh |= 1 << x
                flooded |= 1 << x
    return flooded


def closure(g: Graph, c: VertexSet) -> VertexSet:
    """Least superset of ``c`` closed under the cascade step."""
    g.check_set(c)
    return _closure(g.adj, c)


def floods(g: Graph, c: VertexSet) -> bool:
    g.check_set(c)
    return _closure(g.adj, c) == g.full


def trace(g: Graph, c: VertexSet) -> CascadeTrace:
    steps = [c]
    while True:
        nxt = cascade_step(g, steps[-1])
        if nxt == steps[-1]:
            return CascadeTrace(tuple(steps))
        steps.append(nxt)
