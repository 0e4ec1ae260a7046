import itertools
import os
import random
import sys

import pytest
from hypothesis import HealthCheck, assume, settings
from hypothesis import strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from racgtree.graph import Graph, precondition_gate  # noqa: E402

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


def triangle_free_from(n, tree_parents, extra_pairs):
    """Spanning tree from parent choices, then extra edges that avoid triangles."""
    adj = [set() for _ in range(n)]
    edges = []

    def add(i, j):
        if i == j or j in adj[i] or adj[i] & adj[j]:
            return
        adj[i].add(j)
        adj[j].add(i)
        edges.append((str(i), str(j)))

    for v in range(1, n):
        add(v, tree_parents[v - 1] % v)
    for i, j in extra_pairs:
        add(i % n, j % n)
    return Graph.from_edges(edges, [str(v) for v in range(n)])


@st.composite
def connected_triangle_free(draw, min_n=4, max_n=10):
    n = draw(st.integers(min_n, max_n))
    parents = draw(st.lists(st.integers(0, n), min_size=n - 1, max_size=n - 1))
    extra = draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=3 * n))
    return triangle_free_from(n, parents, extra)


@st.composite
def any_graph(draw, max_n=9):
    n = draw(st.integers(0, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(
        [(str(i), str(j)) for (i, j), keep in zip(pairs, chosen) if keep], [str(v) for v in range(n)]
    )


def grow_until_gated(n, pair_order):
    """Add edges in ``pair_order`` (skipping triangles) until the gate passes.

    Stops at the first graph with at least ``n`` edges that passes the gate
    and is not a cycle, so results stay sparse enough to have cuts.  Returns
    None when the order never gets there.
    """
    adj = [set() for _ in range(n)]
    count = 0
    for i, j in pair_order:
        if i == j or j in adj[i] or adj[i] & adj[j]:
            continue
        adj[i].add(j)
        adj[j].add(i)
        count += 1
        if count >= n:
            g = Graph.from_edges(
                [(str(a), str(b)) for a in range(n) for b in adj[a] if a < b], [str(v) for v in range(n)]
            )
            report = precondition_gate(g)
            if report.passed and not report.is_cycle_graph:
                return g
    return None


@st.composite
def gated_graph(draw, min_n=5, max_n=10):
    """Connected triangle-free graphs that pass the gate and are not cycles."""
    n = draw(st.integers(min_n, max_n))
    order = draw(st.permutations(list(itertools.combinations(range(n), 2))))
    g = grow_until_gated(n, order)
    assume(g is not None)
    return g


def random_gated(rng: random.Random, n: int):
    pairs = list(itertools.combinations(range(n), 2))
    rng.shuffle(pairs)
    return grow_until_gated(n, pairs)


def random_connected_triangle_free(rng: random.Random, n: int) -> Graph:
    parents = [rng.randrange(v) for v in range(1, n)]
    extra = [(rng.randrange(n), rng.randrange(n)) for _ in range(rng.randint(0, 2 * n))]
    return triangle_free_from(n, parents, extra)


_ACCEPTANCE = {}


@pytest.fixture
def acceptance_record():
    def record(number, ok, detail=""):
        _ACCEPTANCE[number] = (ok, detail)

    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        ok, detail = _ACCEPTANCE[number]
        terminalreporter.write_line(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {detail}")
