"""Text formats: 1-indexed edge lists and graph6."""

from __future__ import annotations

from collections.abc import Iterator
from pathlib import Path

from floodpoly.errors import FloodPolyError, GraphFormatError
from floodpoly.graph import Graph

GRAPH6_HEADER = ">>graph6<<"


def parse_edge_list(text: str) -> Graph:
    """Parse ``n m`` followed by ``m`` lines ``u v`` (1-indexed).

    Blank lines and ``#`` comments are ignored.
    """
    rows = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append(line.split())
    if not rows:
        raise GraphFormatError("empty edge list")
    try:
        n, m = (int(t) for t in rows[0])
        edges = [(int(u) - 1, int(v) - 1) for u, v in rows[1:]]
    except ValueError as exc:
        raise GraphFormatError(f"malformed edge list: {exc}") from None
    if len(edges) != m:
        raise GraphFormatError(f"header promises {m} edges, found {len(edges)}")
    try:
        return Graph.from_edge_list(n, edges)
    except FloodPolyError as exc:
        raise GraphFormatError(str(exc)) from None


def format_edge_list(g: Graph) -> str:
    edges = g.edges()
    lines = [f"{g.n} {len(edges)}"]
    lines += [f"{u + 1} {v + 1}" for u, v in edges]
    return "\n".join(lines) + "\n"


def read_edge_list(path: str | Path) -> Graph:
    return parse_edge_list(Path(path).read_text())


def _size_prefix(n: int) -> list[int]:
    if n <= 62:
        return [n]
    if n <= 258047:
        return [63, (n >> 12) & 63, (n >> 6) & 63, n & 63]
    return [63, 63] + [(n >> s) & 63 for s in range(30, -1, -6)]


def to_graph6(g: Graph) -> str:
    """Encode with the standard graph6 layout (no header)."""
    bits = [g.adj[i] >> j & 1 for j in range(1, g.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    words = [
        int("".join(map(str, bits[k : k + 6])), 2) for k in range(0, len(bits), 6)
    ]
    return "".join(chr(63 + w) for w in _size_prefix(g.n) + words)


def from_graph6(line: str) -> Graph:
    s = line.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER) :]
    if not s:
        raise GraphFormatError("empty graph6 string")
    vals = [ord(ch) - 63 for ch in s]
    if any(not 0 <= v <= 63 for v in vals):
        raise GraphFormatError(f"invalid graph6 character in {line!r}")
    if vals[0] < 63:
        n, body = vals[0], vals[1:]
    elif len(vals) >= 2 and vals[1] == 63:
        if len(vals) < 8:
            raise GraphFormatError("truncated graph6 size field")
        n = 0
        for v in vals[2:8]:
            n = n << 6 | v
        body = vals[8:]
    else:
        if len(vals) < 4:
            raise GraphFormatError("truncated graph6 size field")
        n = vals[1] << 12 | vals[2] << 6 | vals[3]
        body = vals[4:]
    need = n * (n - 1) // 2
    if len(body) != (need + 5) // 6:
        raise GraphFormatError(f"graph6 body has {len(body)} bytes, expected {(need + 5) // 6}")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    return Graph.from_edge_list(n, edges)


def iter_graph6(text: str) -> Iterator[Graph]:
    for line in text.splitlines():
        line = line.strip()
        if line:
            yield from_graph6(line)


def read_graph6(path: str | Path) -> list[Graph]:
    return list(iter_graph6(Path(path).read_text()))
