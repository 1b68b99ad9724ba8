"""Immutable simple graphs over bitmask vertex sets.

A vertex set is a plain ``int`` whose bit ``i`` marks vertex ``i``.  Python
integers are arbitrary precision, so the same representation covers graphs of
any size; the enumeration kernel switches to fixed-width numpy words.
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from itertools import combinations

from floodpoly.errors import IndexOutOfRange, InvalidParameter, SelfLoop, TooLarge

VertexSet = int

CANONICAL_MAX_N = 10


def vertex_set(vertices: Iterable[int]) -> VertexSet:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def members(mask: VertexSet) -> list[int]:
    """Sorted vertex indices contained in ``mask``."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def popcount(mask: VertexSet) -> int:
    return bin(mask).count("1")


def format_set(mask: VertexSet) -> str:
    """Render a vertex set 1-indexed, e.g. ``{1, 3, 5}``."""
    return "{" + ", ".join(str(v + 1) for v in members(mask)) + "}"


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        if self.n < 0 or len(self.adj) != self.n:
            raise InvalidParameter(f"adjacency has {len(self.adj)} rows for n={self.n}")
        if self.labels is not None and len(self.labels) != self.n:
            raise InvalidParameter("one label per vertex required")
        full = (1 << self.n) - 1
        for v, nb in enumerate(self.adj):
            if nb & ~full:
                raise IndexOutOfRange(f"vertex {v} has a neighbor outside 0..{self.n - 1}")
            if nb >> v & 1:
                raise SelfLoop(f"self-loop at vertex {v}")
            for u in members(nb):
                if not self.adj[u] >> v & 1:
                    raise InvalidParameter(f"asymmetric adjacency between {v} and {u}")

    @classmethod
    def from_edge_list(
        cls,
        n: int,
        edges: Iterable[tuple[int, int]],
        labels: Sequence[str] | None = None,
    ) -> Graph:
        """Build a graph on vertices ``0..n-1``; repeated edges collapse."""
        if n < 0:
            raise InvalidParameter(f"vertex count must be nonnegative, got {n}")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise IndexOutOfRange(f"edge ({u}, {v}) outside 0..{n - 1}")
            if u == v:
                raise SelfLoop(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj), tuple(labels) if labels is not None else None)

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, (0,) * n)

    @property
    def full(self) -> VertexSet:
        return (1 << self.n) - 1

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else f"v_{v + 1}"

    def _check(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise IndexOutOfRange(f"vertex {v} outside 0..{self.n - 1}")

    def check_set(self, c: VertexSet) -> None:
        if c < 0 or c & ~self.full:
            raise IndexOutOfRange(f"vertex set {c:#x} not contained in 0..{self.n - 1}")

    def neighbors(self, v: int) -> list[int]:
        self._check(v)
        return members(self.adj[v])

    def degree(self, v: int) -> int:
        self._check(v)
        return popcount(self.adj[v])

    def degrees(self) -> list[int]:
        return [popcount(nb) for nb in self.adj]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in members(self.adj[u] >> (u + 1) << (u + 1))]

    @property
    def num_edges(self) -> int:
        return sum(popcount(nb) for nb in self.adj) // 2

    def leaves_and_isolated(self) -> VertexSet:
        """Vertices of degree at most one."""
        return vertex_set(v for v, nb in enumerate(self.adj) if nb & (nb - 1) == 0)

    def triggers(self) -> list[tuple[int, int]]:
        """Edges whose endpoints both have degree exactly two, sorted."""
        deg = self.degrees()
        return [(u, v) for u, v in self.edges() if deg[u] == 2 and deg[v] == 2]

    def components(self) -> list[VertexSet]:
        """Connected components, ordered by their smallest vertex."""
        out = []
        seen = 0
        for start in range(self.n):
            if seen >> start & 1:
                continue
            comp = frontier = 1 << start
            while frontier:
                reach = 0
                for v in members(frontier):
                    reach |= self.adj[v]
                frontier = reach & ~comp
                comp |= frontier
            seen |= comp
            out.append(comp)
        return out

    def diameter(self) -> float:
        """Largest shortest-path distance; ``math.inf`` when disconnected."""
        if self.n <= 1:
            return 0
        best = 0
        for start in range(self.n):
            reached = frontier = 1 << start
            dist = 0
            while frontier:
                nxt = 0
                for v in members(frontier):
                    nxt |= self.adj[v]
                frontier = nxt & ~reached
                if frontier:
                    reached |= frontier
                    dist += 1
            if reached != self.full:
                return math.inf
            best = max(best, dist)
        return best

    def permuted(self, order: Sequence[int]) -> Graph:
        """Relabel so that new vertex ``i`` is old vertex ``order[i]``."""
        if sorted(order) != list(range(self.n)):
            raise InvalidParameter("order must be a permutation of the vertices")
        pos = [0] * self.n
        for i, old in enumerate(order):
            pos[old] = i
        edges = [(pos[u], pos[v]) for u, v in self.edges()]
        labels = [self.labels[old] for old in order] if self.labels is not None else None
        return Graph.from_edge_list(self.n, edges, labels)

    def disjoint_union(self, other: Graph) -> Graph:
        shift = self.n
        adj = self.adj + tuple(nb << shift for nb in other.adj)
        labels = None
        if self.labels is not None or other.labels is not None:
            labels = tuple(self.label(v) for v in range(self.n)) + tuple(
                other.label(v) for v in range(other.n)
            )
        return Graph(self.n + other.n, adj, labels)

    def canonical_order(self) -> list[int]:
        return _canonical_search(self)[0]

    def canonical_form(self) -> bytes:
        """Isomorphism-invariant byte string; equal strings iff isomorphic."""
        return _canonical_search(self)[1]

    def canonical_graph(self) -> Graph:
        return Graph.from_edge_list(self.n, self.permuted(self.canonical_order()).edges())


def disjoint_union(*graphs: Graph) -> Graph:
    out = Graph.empty(0)
    for g in graphs:
        out = out.disjoint_union(g)
    return out


def _refined_colors(g: Graph) -> list[int]:
    """Stable colouring by iterated neighbour-colour multisets (1-WL)."""
    colors = g.degrees()
    while True:
        sigs = [
            (colors[v], tuple(sorted(colors[u] for u in members(g.adj[v]))))
            for v in range(g.n)
        ]
        rank = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [rank[s] for s in sigs]
        if len(rank) == len(set(colors)):
            return new
        colors = new


def _pack_bits(n: int, bits: Sequence[int]) -> bytes:
    value = 0
    for b in bits:
        value = value << 1 | b
    nbytes = (len(bits) + 7) // 8
    pad = nbytes * 8 - len(bits)
    return bytes([n]) + (value << pad).to_bytes(nbytes, "big")


def _canonical_search(g: Graph) -> tuple[list[int], bytes]:
    """Minimise the column-major upper triangle over colour-respecting orders.

    The refined colouring is itself isomorphism invariant, so restricting the
    exhaustive search to permutations that list colour classes in order loses
    nothing; within each class every permutation is still tried, with
    branch-and-bound pruning on the bit prefix.
    """
    n = g.n
    if n > CANONICAL_MAX_N:
        raise TooLarge(f"canonical form limited to n <= {CANONICAL_MAX_N}, got {n}")
    colors = _refined_colors(g)
    slot_colors = sorted(colors)
    adj = g.adj
    best: list[int] | None = None
    best_order: list[int] = []
    order: list[int] = []
    bits: list[int] = []

    def rec(used: int) -> None:
        nonlocal best, best_order
        j = len(order)
        if j == n:
            if best is None or bits < best:
                best = bits.copy()
                best_order = order.copy()
            return
        want = slot_colors[j]
        for c in range(n):
            if used >> c & 1 or colors[c] != want:
                continue
            seg = [adj[order[i]] >> c & 1 for i in range(j)]
            mark = len(bits)
            bits.extend(seg)
            if best is not None and bits > best[: len(bits)]:
                del bits[mark:]
                continue
            order.append(c)
            rec(used | 1 << c)
            order.pop()
            del bits[mark:]

    rec(0)
    return best_order, _pack_bits(n, best if best is not None else [])


def all_labeled_graphs(n: int) -> Iterator[Graph]:
    """Every simple graph on vertices ``0..n-1`` (2^(n choose 2) of them)."""
    pairs = list(combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        yield Graph.from_edge_list(n, [p for i, p in enumerate(pairs) if bits >> i & 1])


_NONISO_CACHE: dict[int, list[Graph]] = {0: [Graph.empty(0)]}


def nonisomorphic_graphs(n: int) -> list[Graph]:
    """One canonical representative per isomorphism class on ``n`` vertices.

    Built by vertex augmentation: every graph on ``n`` vertices is some
    graph on ``n - 1`` vertices plus one vertex, so extending each class
    representative by every neighbourhood and deduplicating by canonical
    form is complete.
    """
    if n < 0:
        raise InvalidParameter("n must be nonnegative")
    if n > CANONICAL_MAX_N:
        raise TooLarge(f"graph enumeration limited to n <= {CANONICAL_MAX_N}")
    if n in _NONISO_CACHE:
        return _NONISO_CACHE[n]
    seen: dict[bytes, Graph] = {}
    for base in nonisomorphic_graphs(n - 1):
        for nbhd in range(1 << (n - 1)):
            edges = base.edges() + [(u, n - 1) for u in members(nbhd)]
            g = Graph.from_edge_list(n, edges)
            key = g.canonical_form()
            if key not in seen:
                seen[key] = g.canonical_graph()
    out = [seen[k] for k in sorted(seen)]
    _NONISO_CACHE[n] = out
    return out
