"""Family-specific flooding criteria checked against the cascade itself."""

from hypothesis import given, settings
from hypothesis import strategies as st

from floodpoly.cascade import floods
from floodpoly.families import cycle, parallel_path, path, triangle_mosaic


def _bit(s, v):
    return s >> v & 1


def _column(s, m, n, j):
    """True if s meets column j (0-indexed) of the m-by-n grid."""
    return any(_bit(s, i * n + j) for i in range(m))


def has_parallel_path_property(s, m, n):
    if not (_column(s, m, n, 0) and _column(s, m, n, n - 1)):
        return False
    return all(_column(s, m, n, j) or _column(s, m, n, j + 1) for j in range(1, n - 1))


@given(st.integers(1, 14), st.data())
def test_path_floods_iff_parallel_path_property(n, data):
    s = data.draw(st.integers(0, (1 << n) - 1))
    assert floods(path(n), s) == has_parallel_path_property(s, 1, n)


@given(st.integers(3, 14), st.data())
def test_cycle_floods_iff_complement_trigger_free(n, data):
    s = data.draw(st.integers(0, (1 << n) - 1))
    comp = [not _bit(s, v) for v in range(n)]
    trigger_free = not any(comp[v] and comp[(v + 1) % n] for v in range(n))
    assert floods(cycle(n), s) == trigger_free


@given(st.integers(2, 14), st.data())
def test_triangle_floods_iff_close_pair(n, data):
    s = data.draw(st.integers(0, (1 << n) - 1))
    verts = [v for v in range(n) if _bit(s, v)]
    close = any(b - a <= 4 for a, b in zip(verts, verts[1:]))
    assert floods(triangle_mosaic(n), s) == close


@given(st.integers(2, 14), st.data())
def test_triangle_adjacent_pair_floods(n, data):
    k = data.draw(st.integers(0, n - 2))
    extra = data.draw(st.integers(0, (1 << n) - 1))
    assert floods(triangle_mosaic(n), extra | 3 << k)


@given(st.integers(1, 8), st.data())
def test_two_row_grid_criterion(n, data):
    s = data.draw(st.integers(0, (1 << 2 * n) - 1))
    g = parallel_path(2, n)
    if not has_parallel_path_property(s, 2, n):
        assert not floods(g, s)
        return
    top = lambda j: _bit(s, j)  # noqa: E731
    bottom = lambda j: 0 <= j < n and _bit(s, n + j)  # noqa: E731
    linked = any(top(j) and (bottom(j - 1) or bottom(j) or bottom(j + 1)) for j in range(n))
    assert floods(g, s) == linked


@settings(max_examples=200)
@given(st.integers(1, 4), st.integers(1, 4), st.data())
def test_grid_flooding_sets_have_parallel_path_property(m, n, data):
    s = data.draw(st.integers(0, (1 << m * n) - 1))
    if floods(parallel_path(m, n), s):
        assert has_parallel_path_property(s, m, n)
