"""Deliberately naive reference implementations used as test oracles.

Plain Python sets and the synchronous cascade definition; shares no code
with the package's bitmask kernels.
"""

from itertools import combinations


def neighbours(n, edges):
    nb = {v: set() for v in range(n)}
    for u, v in edges:
        nb[u].add(v)
        nb[v].add(u)
    return nb


def naive_closure(n, edges, seed):
    nb = neighbours(n, edges)
    cur = set(seed)
    while True:
        nxt = cur | {x for x in range(n) if len(nb[x] & cur) >= 2}
        if nxt == cur:
            return cur
        cur = nxt


def naive_floods(n, edges, seed):
    return len(naive_closure(n, edges, seed)) == n


def naive_coeffs(n, edges):
    """Coefficient list of the flood polynomial by direct subset enumeration."""
    out = [0] * (n + 1)
    for k in range(n + 1):
        for c in combinations(range(n), k):
            if naive_floods(n, edges, c):
                out[k] += 1
    return out


def naive_minimal(n, edges):
    flooding = [
        frozenset(c)
        for k in range(n + 1)
        for c in combinations(range(n), k)
        if naive_floods(n, edges, c)
    ]
    fset = set(flooding)
    return [
        c for c in flooding
        if not any(frozenset(s) in fset for k in range(len(c)) for s in combinations(sorted(c), k))
    ]


def poly_coeffs_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out
