"""Graph family generators, compositions, and the family-spec grammar.

Family specs look like ``path:4 + cycle:4`` or ``centipede:1,2,2``; ``+`` and
``⊕`` both denote disjoint union.  Atoms::

    path:n  grid:mxn  cycle:n  complete:n  triangle:n
    centipede:a1,a2,...  tick:a1,a2,...  edgelist:FILE
"""

from __future__ import annotations

import re
from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from itertools import combinations

from floodpoly.errors import FamilySyntaxError, InvalidParameter, OutOfRange
from floodpoly.graph import Graph, disjoint_union


class Composition(tuple):
    """A nonempty sequence of positive integers."""

    def __new__(cls, parts: Iterable[int]):
        parts = tuple(int(p) for p in parts)
        if not parts:
            raise InvalidParameter("a composition needs at least one part")
        if any(p < 1 for p in parts):
            raise InvalidParameter(f"composition parts must be positive: {parts}")
        return super().__new__(cls, parts)

    @property
    def total(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def __repr__(self):
        return f"Composition({tuple(self)})"


def descent_set(a: Composition) -> frozenset[int]:
    """Partial sums of all parts but the last."""
    out, acc = [], 0
    for part in a[:-1]:
        acc += part
        out.append(acc)
    return frozenset(out)


def co(s: Iterable[int], n: int) -> Composition:
    """The composition of ``n`` whose descent set is ``s`` (a subset of 1..n-1)."""
    pts = sorted(set(s))
    if n < 1:
        raise OutOfRange(f"n must be positive, got {n}")
    if any(not 1 <= p <= n - 1 for p in pts):
        raise OutOfRange(f"{pts} is not a subset of 1..{n - 1}")
    bounds = [0] + pts + [n]
    return Composition(b - a for a, b in zip(bounds, bounds[1:]))


def compositions(n: int) -> Iterator[Composition]:
    """All compositions of ``n``, in lexicographic order of descent set."""
    def rec(start: int, chosen: list[int]) -> Iterator[list[int]]:
        yield chosen
        for s in range(start, n):
            chosen.append(s)
            yield from rec(s + 1, chosen)
            chosen.pop()

    for d in rec(1, []):
        yield co(d, n)


def comp_n_4(n: int) -> Iterator[Composition]:
    """Compositions of ``n + 1`` with some interior part of size at most 4."""
    for a in compositions(n + 1):
        if any(p <= 4 for p in a[1:-1]):
            yield a


def path(n: int) -> Graph:
    if n < 1:
        raise InvalidParameter(f"path needs n >= 1, got {n}")
    return Graph.from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def parallel_path(m: int, n: int) -> Graph:
    """The m-by-n grid; vertex ``v_{i,j}`` sits at row-major index."""
    if m < 1 or n < 1:
        raise InvalidParameter(f"parallel path needs m, n >= 1, got {m}x{n}")
    idx = lambda i, j: i * n + j  # noqa: E731
    edges = [(idx(i, j), idx(i, j + 1)) for i in range(m) for j in range(n - 1)]
    edges += [(idx(i, j), idx(i + 1, j)) for i in range(m - 1) for j in range(n)]
    labels = [f"v_{{{i + 1},{j + 1}}}" for i in range(m) for j in range(n)]
    return Graph.from_edge_list(m * n, edges, labels)


def cycle(n: int) -> Graph:
    if n < 3:
        raise InvalidParameter(f"cycle needs n >= 3, got {n}")
    return Graph.from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise InvalidParameter(f"complete graph needs n >= 1, got {n}")
    return Graph.from_edge_list(n, combinations(range(n), 2))


def triangle_mosaic(n: int) -> Graph:
    """Vertices ``v_1..v_n`` joined whenever their indices differ by 1 or 2."""
    if n < 1:
        raise InvalidParameter(f"triangle mosaic needs n >= 1, got {n}")
    return Graph.from_edge_list(
        n, [(i, j) for i in range(n) for j in (i + 1, i + 2) if j < n]
    )


def _decorate(spine: Graph, hubs: list[int]) -> Graph:
    """Hang four new leaves on each hub (0-indexed spine vertex)."""
    n = spine.n
    edges = spine.edges()
    labels = [f"v_{i + 1}" for i in range(n)]
    nxt = n
    for h in hubs:
        for k in range(4):
            edges.append((h, nxt))
            labels.append(f"l_{{{h + 1},{k + 1}}}")
            nxt += 1
    return Graph.from_edge_list(nxt, edges, labels)


def centipede(a: Iterable[int]) -> Graph:
    """Path on ``sum(a) + 1`` vertices with four leaves on ``v_{d+1}``, d in D(a)."""
    a = Composition(a)
    n = a.total + 1
    if n < 3:
        raise InvalidParameter(f"centipede needs a composition of n-1 with n >= 3, got {tuple(a)}")
    return _decorate(path(n), [d for d in sorted(descent_set(a))])


def tick(a: Iterable[int]) -> Graph:
    """Cycle on ``sum(a)`` vertices with four leaves on ``v_d``, d in D(a) and n."""
    a = Composition(a)
    n = a.total
    if n < 3:
        raise InvalidParameter(f"tick needs a composition of n >= 3, got {tuple(a)}")
    return _decorate(cycle(n), [d - 1 for d in sorted(descent_set(a) | {n})])


@dataclass(frozen=True)
class FamilyAtom:
    family: str
    params: tuple

    def build(self) -> Graph:
        f, p = self.family, self.params
        if f == "path":
            return path(*p)
        if f == "grid":
            return parallel_path(*p)
        if f == "cycle":
            return cycle(*p)
        if f == "complete":
            return complete(*p)
        if f == "triangle":
            return triangle_mosaic(*p)
        if f == "centipede":
            return centipede(p)
        if f == "tick":
            return tick(p)
        if f == "edgelist":
            from floodpoly.graphio import read_edge_list

            return read_edge_list(p[0])
        raise FamilySyntaxError(f"unknown family {f!r}")

    def __str__(self):
        if self.family == "grid":
            return f"grid:{self.params[0]}x{self.params[1]}"
        return f"{self.family}:" + ",".join(str(x) for x in self.params)


@dataclass(frozen=True)
class FamilySpec:
    atoms: tuple[FamilyAtom, ...]

    def build(self) -> Graph:
        return disjoint_union(*(a.build() for a in self.atoms))

    def __str__(self):
        return " + ".join(str(a) for a in self.atoms)


FAMILIES = ("path", "grid", "cycle", "complete", "triangle", "centipede", "tick", "edgelist")
_INT = re.compile(r"\d+")


def _ints(name: str, text: str) -> tuple[int, ...]:
    parts = [t.strip() for t in text.split(",")]
    if not all(_INT.fullmatch(t) for t in parts):
        raise FamilySyntaxError(f"{name}: expected comma-separated integers, got {text!r}")
    return tuple(int(t) for t in parts)


def _parse_atom(text: str) -> FamilyAtom:
    name, sep, arg = text.partition(":")
    name, arg = name.strip().lower(), arg.strip()
    if not sep or not arg:
        raise FamilySyntaxError(f"expected family:parameters, got {text!r}")
    if name == "edgelist":
        return FamilyAtom(name, (arg,))
    if name in ("path", "cycle", "complete", "triangle"):
        params = _ints(name, arg)
        if len(params) != 1:
            raise FamilySyntaxError(f"{name} takes one parameter, got {arg!r}")
        return FamilyAtom(name, params)
    if name == "grid":
        m = re.fullmatch(r"(\d+)\s*[x×X,]\s*(\d+)", arg)
        if not m:
            raise FamilySyntaxError(f"grid expects MxN, got {arg!r}")
        return FamilyAtom(name, (int(m.group(1)), int(m.group(2))))
    if name in ("centipede", "tick"):
        return FamilyAtom(name, _ints(name, arg))
    raise FamilySyntaxError(f"unknown family {name!r}; expected one of {', '.join(FAMILIES)}")


def parse_family_spec(text: str) -> FamilySpec:
    pieces = re.split(r"[+⊕]", text)
    if not text.strip() or any(not p.strip() for p in pieces):
        raise FamilySyntaxError(f"empty atom in family spec {text!r}")
    return FamilySpec(tuple(_parse_atom(p) for p in pieces))


def parse_family(text: str) -> Graph:
    """Parse a family spec and generate its graph."""
    return parse_family_spec(text).build()
