"""Induced squares, the diagonal graph and the CFS test."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Optional

from racgtree import kernels, trees
from racgtree.graph import Graph


def square_indices(g: Graph) -> list:
    """Induced squares as sorted pairs of index diagonals ``((a, c), (b, d))``."""
    out = []
    for a, c, b, d in kernels.induced_squares(g.adj, g.n):
        p, q = (min(a, c), max(a, c)), (min(b, d), max(b, d))
        out.append((p, q) if p < q else (q, p))
    out.sort()
    return out


def induced_squares(g: Graph) -> list:
    """Every induced 4-cycle, reported once as ``(diagonal1, diagonal2)``.

    Diagonals are sorted name pairs and ``diagonal1 < diagonal2``; the list is
    sorted.
    """
    names = g.names
    return [
        ((names[p[0]], names[p[1]]), (names[q[0]], names[q[1]]))
        for p, q in square_indices(g)
    ]


@dataclass(frozen=True)
class DiagonalGraph:
    """Diagonal pairs of induced squares, with one edge per square.

    ``vertices`` are sorted name pairs; ``edges`` are ``(p, q)`` with
    ``p < q``.  The square behind an edge is ``p`` joined with ``q``, so the
    label and the endpoints coincide.
    """

    vertices: tuple
    edges: tuple

    @cached_property
    def adj(self) -> dict:
        return trees.adjacency(self.vertices, self.edges)

    def support(self, vertex) -> tuple:
        return tuple(vertex)

    def degree(self, vertex) -> int:
        return len(self.adj[vertex])

    def components(self) -> list:
        return trees.components(self.vertices, self.edges)

    def is_tree(self) -> bool:
        return trees.is_tree(self.vertices, self.edges)

    def leaves(self) -> tuple:
        return tuple(v for v in self.vertices if len(self.adj[v]) == 1)

    def as_dict(self) -> dict:
        return {
            "vertices": [list(v) for v in self.vertices],
            "edges": [[list(p), list(q)] for p, q in self.edges],
        }


def diagonal_graph(g: Graph) -> DiagonalGraph:
    squares = induced_squares(g)
    vertices = sorted({d for sq in squares for d in sq})
    return DiagonalGraph(tuple(vertices), tuple(squares))


@dataclass(frozen=True)
class CFSReport:
    cfs: bool
    witness_component: Optional[tuple]


def is_cfs(g: Graph) -> CFSReport:
    """Does some component of the diagonal graph support every non-cone vertex?"""
    non_cone = {
        g.names[v] for v in range(g.n) if g.adj[v] != g.full & ~(1 << v)
    }
    best = None
    for comp in diagonal_graph(g).components():
        support = {x for pair in comp for x in pair}
        if support == non_cone:
            key = sorted(support)
            if best is None or key < best[0]:
                best = (key, comp)
    return CFSReport(best is not None, best[1] if best else None)
