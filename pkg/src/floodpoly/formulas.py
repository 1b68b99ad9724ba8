"""Closed forms and recursions for flood polynomials of graph families.

Nothing here enumerates subsets; every value is built from polynomial
arithmetic so it can be checked against :mod:`floodpoly.enumeration`.
"""

from __future__ import annotations

from math import comb

from floodpoly.errors import InvalidParameter, NotApplicable, TooLarge
from floodpoly.families import Composition, FamilyAtom, FamilySpec, comp_n_4
from floodpoly.graph import Graph, members
from floodpoly.poly import ONE, X, ZERO, IntPolynomial

TRIANGLE_CAP = 24

P3_POLY = IntPolynomial([0, 0, 1, 1])


def _xfib(a: IntPolynomial, b: IntPolynomial, n: int, start: int) -> IntPolynomial:
    """Run ``t_k = x t_{k-1} + x t_{k-2}`` from ``t_{start-1} = a, t_start = b`` to k = n."""
    if n == start - 1:
        return a
    prev, cur = a, b
    for _ in range(start, n):
        prev, cur = cur, (cur + prev).shift(1)
    return cur


def fibonacci_poly(n: int) -> IntPolynomial:
    """``f_0 = 0``, ``f_1 = x``, ``f_n = x f_{n-1} + x f_{n-2}``."""
    if n < 0:
        raise InvalidParameter(f"n must be nonnegative, got {n}")
    return _xfib(ZERO, X, n, 1)


def lucas_poly(n: int) -> IntPolynomial:
    """``L_0 = 2``, ``L_1 = x``, same recursion as :func:`fibonacci_poly`."""
    if n < 0:
        raise InvalidParameter(f"n must be nonnegative, got {n}")
    return _xfib(IntPolynomial([2]), X, n, 1)


def path_flood_poly(n: int) -> IntPolynomial:
    if n < 1:
        raise InvalidParameter(f"path needs n >= 1, got {n}")
    return _xfib(X, X.shift(1), n, 2)


def cycle_flood_poly(n: int) -> IntPolynomial:
    if n < 3:
        raise InvalidParameter(f"cycle needs n >= 3, got {n}")
    return _xfib(IntPolynomial([0, 0, 3, 1]), IntPolynomial([0, 0, 2, 4, 1]), n, 4)


_X2_2X = IntPolynomial([0, 2, 1])


def a_poly(n: int) -> IntPolynomial:
    """Weight enumerator of 2-by-n cascade sets with the parallel path property."""
    if n < 1:
        raise InvalidParameter(f"n must be positive, got {n}")
    prev, cur = _X2_2X, _X2_2X * _X2_2X
    if n == 1:
        return prev
    for _ in range(2, n):
        prev, cur = cur, _X2_2X * (cur + prev)
    return cur


def b_poly(n: int) -> IntPolynomial:
    """Same, restricted to the sets that fail to flood."""
    if n < 1:
        raise InvalidParameter(f"n must be positive, got {n}")
    prev, cur = IntPolynomial([0, 2]), IntPolynomial([0, 0, 2])
    if n == 1:
        return prev
    for _ in range(2, n):
        prev, cur = cur, (cur + 2 * prev).shift(1)
    return cur


def parallel_path_2n_poly(n: int) -> IntPolynomial:
    return a_poly(n) - b_poly(n)


def triangle_mosaic_poly(n: int, *, cap: int = TRIANGLE_CAP, literal: bool = True) -> IntPolynomial:
    """Sum of ``x^(len(a) - 1)`` over ``comp_n_4(n)``.

    ``n = 1`` is special-cased to ``x``: the single vertex floods itself but
    has no pair of seeds, so the composition sum is empty there.  With
    ``literal=False`` the coefficients are counted directly: a ``k``-subset
    of ``1..n`` has all gaps >= 5 in ``C(n - 4(k-1), k)`` ways.
    """
    if n < 1:
        raise InvalidParameter(f"triangle mosaic needs n >= 1, got {n}")
    if n == 1:
        return X
    if not literal:
        return IntPolynomial(
            comb(n, k) - (comb(n - 4 * (k - 1), k) if n - 4 * (k - 1) >= 0 else 0)
            for k in range(n + 1)
        )
    if n > cap:
        raise TooLarge(f"literal composition sum capped at n <= {cap}")
    counts = [0] * (n + 1)
    for a in comp_n_4(n):
        counts[len(a) - 1] += 1
    return IntPolynomial(counts)


def _fib_product(a: Composition) -> IntPolynomial:
    out = ONE
    for part in a:
        out = out * fibonacci_poly(part + 1)
    return out


def centipede_poly(a) -> IntPolynomial:
    a = Composition(a)
    if a.total + 1 < 3:
        raise InvalidParameter(f"centipede needs n >= 3, got composition of {a.total}")
    return P3_POLY ** (a.length - 1) * _fib_product(a)


def tick_poly(a) -> IntPolynomial:
    a = Composition(a)
    if a.total < 3:
        raise InvalidParameter(f"tick needs n >= 3, got composition of {a.total}")
    return P3_POLY ** a.length * _fib_product(a)


def even_path_factorization(n: int) -> tuple[IntPolynomial, IntPolynomial]:
    """``(f_n, L_n)``, whose product is the flood polynomial of the 2n-path."""
    if n < 3:
        raise InvalidParameter(f"factorisation stated for n >= 3, got {n}")
    return fibonacci_poly(n), lucas_poly(n)


def find_reducible_vertex(g: Graph) -> tuple[int, list[int], list[int]] | None:
    """Smallest ``v`` of degree ``2m + 2`` (m >= 1) with >= m + 2 leaf neighbours.

    Returns ``(v, leaves, others)`` with ``len(leaves) == m + 2`` and
    ``len(others) == m``, both sorted.  Surplus leaf neighbours (lowest
    indices first) are moved into ``others``.
    """
    deg = g.degrees()
    for v in range(g.n):
        d = deg[v]
        if d < 4 or d % 2:
            continue
        m = (d - 2) // 2
        nbrs = members(g.adj[v])
        leaves = [u for u in nbrs if deg[u] == 1]
        if len(leaves) < m + 2:
            continue
        surplus = len(leaves) - (m + 2)
        others = sorted([u for u in nbrs if deg[u] != 1] + leaves[:surplus])
        return v, leaves[surplus:], others
    return None


def leaf_reduction(g: Graph) -> Graph:
    """Split a heavy leaf hub off as a ``P_3``, preserving the flood polynomial.

    The hub ``v`` keeps only its two highest-indexed chosen leaves (forming
    the ``P_3``); each remaining chosen leaf ``l_k`` is wired to the
    non-chosen neighbour ``g_k``.  Vertex indices are unchanged, so the
    result is ``G' ⊕ P_3`` on the same vertex set.
    """
    found = find_reducible_vertex(g)
    if found is None:
        raise NotApplicable("no vertex of degree 2m+2 with m+2 leaf neighbours")
    v, leaves, others = found
    keep = leaves[-2:]
    edges = [(a, b) for a, b in g.edges() if v not in (a, b)]
    edges += [(v, keep[0]), (v, keep[1])]
    edges += list(zip(leaves[:-2], others))
    return Graph.from_edge_list(g.n, edges, g.labels)


def iterated_leaf_reduction(g: Graph) -> list[Graph]:
    """``[g, reduce(g), reduce(reduce(g)), ...]`` until no vertex qualifies.

    Each step drops the number of vertices of degree >= 4 by one, so the
    chain is finite.
    """
    chain = [g]
    while find_reducible_vertex(chain[-1]) is not None:
        chain.append(leaf_reduction(chain[-1]))
    return chain


def atom_formula(atom: FamilyAtom) -> IntPolynomial | None:
    """Formula value for one family atom, or None when no formula is known."""
    f, p = atom.family, atom.params
    if f == "path":
        return path_flood_poly(p[0])
    if f == "cycle":
        return cycle_flood_poly(p[0])
    if f == "triangle":
        return triangle_mosaic_poly(p[0])
    if f == "centipede":
        return centipede_poly(p)
    if f == "tick":
        return tick_poly(p)
    if f == "grid":
        m, n = sorted(p)
        if m == 1:
            return path_flood_poly(n)
        if m == 2:
            return parallel_path_2n_poly(n)
    return None


def spec_formula(spec: FamilySpec) -> IntPolynomial | None:
    """Product of atom formulas, or None if any atom lacks one."""
    out = ONE
    for atom in spec.atoms:
        part = atom_formula(atom)
        if part is None:
            return None
        out = out * part
    return out
