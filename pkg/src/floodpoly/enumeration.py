"""Exhaustive enumeration of flooding cascade sets.

Subsets are processed in numpy batches: every subset in a chunk is closed
under the cascade step simultaneously, one vertex at a time, until no row
changes.  A subset that misses a vertex of degree <= 1 can never flood, so
by default only subsets containing all such vertices are generated; the
remaining "free" vertices are enumerated as a compressed index ``k`` whose
bit ``i`` selects ``free_positions[i]``.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from floodpoly.errors import TooLarge
from floodpoly.graph import Graph, VertexSet, members, popcount
from floodpoly.poly import IntPolynomial

DEFAULT_CAP = 28
CHUNK_BITS = 16
_HARD_LIMIT = 63


def default_workers() -> int:
    return os.cpu_count() or 1


def _dtype(n: int):
    return np.uint32 if n <= 32 else np.uint64


def _check_cap(g: Graph, cap: int) -> None:
    if g.n > cap:
        raise TooLarge(f"brute force capped at n <= {cap}, graph has n = {g.n}")
    if g.n > _HARD_LIMIT:
        raise TooLarge(f"enumeration kernel supports at most {_HARD_LIMIT} vertices")


def batch_closure(g: Graph, subsets: np.ndarray) -> np.ndarray:
    """Close every row of ``subsets`` (bitmasks) under the cascade step."""
    dt = subsets.dtype
    adj = [dt.type(nb) for nb in g.adj]
    bits = [dt.type(1 << x) for x in range(g.n)]
    one = dt.type(1)
    out = subsets.copy()
    rows = np.arange(len(out))
    work = out.copy()
    hit = np.empty(len(work), dtype=dt)
    mask = np.empty(len(work), dtype=bool)
    while len(work):
        prev = work.copy()
        for x in range(g.n):
            if not adj[x]:
                continue
            np.bitwise_and(work, adj[x], out=hit)
            np.bitwise_and(hit, hit - one, out=hit)
            np.not_equal(hit, 0, out=mask)
            np.bitwise_or(work, bits[x], out=work, where=mask)
        moving = work != prev
        done = ~moving
        out[rows[done]] = work[done]
        rows, work = rows[moving], work[moving]
        hit = hit[: len(work)]
        mask = mask[: len(work)]
    return out


@dataclass(frozen=True)
class _Layout:
    forced: VertexSet
    free_positions: tuple[int, ...]

    @property
    def size(self) -> int:
        return 1 << len(self.free_positions)

    def expand(self, ks: np.ndarray, dt) -> np.ndarray:
        out = np.full(len(ks), self.forced, dtype=dt)
        for i, pos in enumerate(self.free_positions):
            sel = ((ks >> np.uint64(i)) & np.uint64(1)).astype(dt)
            out |= sel << dt(pos)
        return out

    def subset(self, k: int) -> VertexSet:
        out = self.forced
        for i, pos in enumerate(self.free_positions):
            if k >> i & 1:
                out |= 1 << pos
        return out


def _layout(g: Graph, prefilter: bool) -> _Layout:
    forced = g.leaves_and_isolated() if prefilter else 0
    return _Layout(forced, tuple(v for v in range(g.n) if not forced >> v & 1))


def _chunks(size: int) -> list[tuple[int, int]]:
    step = 1 << CHUNK_BITS
    return [(lo, min(lo + step, size)) for lo in range(0, size, step)]


def _flood_chunk(g: Graph, layout: _Layout, lo: int, hi: int) -> np.ndarray:
    dt = _dtype(g.n)
    ks = np.arange(lo, hi, dtype=np.uint64)
    closed = batch_closure(g, layout.expand(ks, dt))
    return closed == dt(g.full)


def _count_chunk(g: Graph, layout: _Layout, lo: int, hi: int) -> np.ndarray:
    dt = _dtype(g.n)
    ks = np.arange(lo, hi, dtype=np.uint64)
    subsets = layout.expand(ks, dt)
    ok = batch_closure(g, subsets) == dt(g.full)
    sizes = np.bitwise_count(subsets[ok])
    return np.bincount(sizes, minlength=g.n + 1).astype(np.int64)


def _run(fn, g: Graph, layout: _Layout, workers: int | None) -> list:
    ranges = _chunks(layout.size)
    workers = workers or default_workers()
    if workers <= 1 or len(ranges) == 1:
        return [fn(g, layout, lo, hi) for lo, hi in ranges]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(lambda r: fn(g, layout, *r), ranges))


def flood_polynomial(
    g: Graph,
    *,
    workers: int | None = None,
    cap: int = DEFAULT_CAP,
    prefilter: bool = True,
) -> IntPolynomial:
    """Coefficient ``k`` counts the ``k``-element subsets that flood ``g``."""
    _check_cap(g, cap)
    layout = _layout(g, prefilter)
    counts = [0] * (g.n + 1)
    for part in _run(_count_chunk, g, layout, workers):
        for k, c in enumerate(part.tolist()):
            counts[k] += c
    return IntPolynomial(counts)


@dataclass(frozen=True)
class FloodTable:
    """Flooding indicator over every subset containing ``layout.forced``."""

    graph: Graph
    layout: _Layout
    floods: np.ndarray

    def subset(self, k: int) -> VertexSet:
        return self.layout.subset(k)

    def flooding_sets(self) -> list[VertexSet]:
        return [self.subset(int(k)) for k in np.flatnonzero(self.floods)]

    def polynomial(self) -> IntPolynomial:
        ks = np.flatnonzero(self.floods).astype(np.uint64)
        sizes = np.bitwise_count(ks).astype(np.int64) + popcount(self.layout.forced)
        return IntPolynomial(np.bincount(sizes, minlength=self.graph.n + 1).tolist())

    @cached_property
    def minimal_indices(self) -> np.ndarray:
        idx = np.flatnonzero(self.floods).astype(np.int64)
        keep = np.ones(len(idx), dtype=bool)
        for i in range(len(self.layout.free_positions)):
            has = (idx >> i) & 1 == 1
            below = np.zeros(len(idx), dtype=bool)
            below[has] = self.floods[idx[has] ^ (1 << i)]
            keep &= ~below
        return idx[keep]

    def minimal_sets(self) -> list[VertexSet]:
        sets = [self.subset(int(k)) for k in self.minimal_indices]
        return sorted(sets, key=lambda s: (popcount(s), members(s)))


def flood_table(
    g: Graph,
    *,
    workers: int | None = None,
    cap: int = DEFAULT_CAP,
    prefilter: bool = True,
) -> FloodTable:
    """Materialise the flooding indicator (one byte per enumerated subset)."""
    _check_cap(g, cap)
    layout = _layout(g, prefilter)
    parts = _run(_flood_chunk, g, layout, workers)
    return FloodTable(g, layout, np.concatenate(parts) if parts else np.zeros(0, bool))


def minimal_flooding_sets(
    g: Graph, *, workers: int | None = None, cap: int = DEFAULT_CAP
) -> list[VertexSet]:
    """Flooding sets with no flooding proper subset, by size then members.

    Flooding is upward closed, so checking single-vertex removals suffices.
    Removing a forced vertex never floods, so only free positions are tried.
    """
    return flood_table(g, workers=workers, cap=cap).minimal_sets()


def free_vertices(g: Graph, *, workers: int | None = None, cap: int = DEFAULT_CAP) -> VertexSet:
    used = 0
    for s in minimal_flooding_sets(g, workers=workers, cap=cap):
        used |= s
    return g.full & ~used


@dataclass(frozen=True)
class FloodSummary:
    polynomial: IntPolynomial
    flood_set_size: int
    minimal_sets: tuple[VertexSet, ...]
    free_vertices: VertexSet


def flood_summary(g: Graph, *, workers: int | None = None, cap: int = DEFAULT_CAP) -> FloodSummary:
    table = flood_table(g, workers=workers, cap=cap)
    poly = table.polynomial()
    minimal = table.minimal_sets()
    used = 0
    for s in minimal:
        used |= s
    return FloodSummary(poly, poly(1), tuple(minimal), g.full & ~used)
