import random
import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from floodpoly.graph import Graph  # noqa: E402

# eight-vertex cascade example, 0-indexed (v1 -> 0)
CASCADE_EXAMPLE_EDGES = [
    (0, 2), (0, 1), (1, 3), (2, 4), (2, 3), (3, 5), (4, 5), (5, 7), (6, 7), (4, 6),
]
# 4-cycle v1 v2 v3 v4 with a pendant v5 on v2
TRIGGER_EXAMPLE_EDGES = [(0, 1), (1, 2), (2, 3), (3, 0), (1, 4)]
# two free vertices (indices 2 and 4), neither adjacent to two leaves
FREE_VERTEX_EXAMPLE_EDGES = [(0, 2), (1, 2), (1, 3), (2, 4), (3, 4), (4, 5)]


@pytest.fixture
def cascade_example():
    return Graph.from_edge_list(8, CASCADE_EXAMPLE_EDGES)


@pytest.fixture
def trigger_example():
    return Graph.from_edge_list(5, TRIGGER_EXAMPLE_EDGES)


@pytest.fixture
def free_vertex_example():
    return Graph.from_edge_list(6, FREE_VERTEX_EXAMPLE_EDGES)


def random_graph(n, p, rng):
    return Graph.from_edge_list(
        n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    )


@st.composite
def graphs(draw, min_n=0, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edge_list(n, [p for p, keep in zip(pairs, chosen) if keep])


@pytest.fixture
def rng():
    return random.Random(20240611)


# criterion number -> (passed, title); filled by test_acceptance.py
ACCEPTANCE_RESULTS: dict[int, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE_RESULTS):
        passed, title = ACCEPTANCE_RESULTS[num]
        terminalreporter.write_line(f"criterion {num}: {'PASS' if passed else 'FAIL'}  {title}")
