"""Separating pairs and 2-paths, crossing, inseparability, and thick joins."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from racgtree import kernels
from racgtree.errors import GraphError, InternalInconsistency
from racgtree.graph import Graph, essential_mask, find_triangle

PAIR = "pair"
TWO_PATH = "two-path"


@dataclass(frozen=True, order=True)
class Cut:
    """A separating pair ``{a,b}`` or 2-path ``a-c-b`` with its components.

    ``ends`` is the sorted non-adjacent pair; ``middle`` is ``c`` for a
    2-path and None for a pair.  ``components`` partitions the rest of the
    graph and serves as the certificate.
    """

    kind: str
    ends: tuple
    middle: Optional[str]
    components: tuple

    @property
    def pole(self) -> tuple:
        return self.ends

    @property
    def vertices(self) -> tuple:
        if self.middle is None:
            return self.ends
        return tuple(sorted(self.ends + (self.middle,)))

    def mask(self, g: Graph) -> int:
        return g.mask(self.vertices)

    def label(self) -> str:
        if self.middle is None:
            return "{" + ",".join(self.ends) + "}"
        a, b = self.ends
        return f"({a},{self.middle},{b})"

    def as_dict(self) -> dict:
        return {
            "kind": self.kind,
            "vertices": list(self.vertices),
            "ends": list(self.ends),
            "middle": self.middle,
            "components": [list(c) for c in self.components],
        }


def _require_connected(g: Graph):
    if g.n == 0 or not g.is_connected_mask(g.full):
        raise GraphError("disconnected input")


def _split(g: Graph, removed: int):
    return kernels.components(g.adj, g.full & ~removed)


def _pair_cut_indices(g: Graph):
    """Non-adjacent index pairs whose removal disconnects ``g``, with components."""
    out = []
    for i, j in combinations(range(g.n), 2):
        if g.adj[i] >> j & 1:
            continue
        comps = _split(g, (1 << i) | (1 << j))
        if len(comps) >= 2:
            out.append(((i, j), comps))
    return out


def _make(g, kind, i, j, c, comps):
    return Cut(
        kind,
        (g.names[i], g.names[j]),
        None if c is None else g.names[c],
        tuple(g.names_of(m) for m in comps),
    )


def cut_pairs(g: Graph) -> list:
    _require_connected(g)
    return [_make(g, PAIR, i, j, None, comps) for (i, j), comps in _pair_cut_indices(g)]


def cut_two_paths(g: Graph) -> list:
    """Separating 2-paths ``a-c-b``, one per middle vertex, skipping cut pairs."""
    _require_connected(g)
    pairs = {ij for ij, _ in _pair_cut_indices(g)}
    out = []
    for i, j in combinations(range(g.n), 2):
        if g.adj[i] >> j & 1 or (i, j) in pairs:
            continue
        for c in kernels.bits(g.adj[i] & g.adj[j]):
            comps = _split(g, (1 << i) | (1 << j) | (1 << c))
            if len(comps) >= 2:
                out.append(_make(g, TWO_PATH, i, j, c, comps))
    return out


def all_cuts(g: Graph) -> list:
    """Cut pairs followed by cut 2-paths, each group in lexicographic order."""
    return cut_pairs(g) + cut_two_paths(g)


def validate_cut(g: Graph, cut: Cut) -> None:
    """Re-derive the certificate of ``cut``; raise GraphError if it is not a cut of ``g``."""
    for v in cut.vertices:
        g.index(v)
    a, b = cut.ends
    if g.has_edge(a, b):
        raise GraphError(f"cut ends {a},{b} are adjacent")
    if cut.middle is not None and not (g.has_edge(a, cut.middle) and g.has_edge(b, cut.middle)):
        raise GraphError(f"{cut.label()} is not a 2-path")
    comps = tuple(g.names_of(m) for m in _split(g, cut.mask(g)))
    if len(comps) < 2 or comps != cut.components:
        raise GraphError(f"{cut.label()} does not separate as recorded")


def _crosses_masks(g, m1, comps1, m2, comps2) -> bool:
    def meets(inner, comps):
        return sum(1 for comp in comps if comp & inner) >= 2

    return meets(m1, comps2) and meets(m2, comps1)


def crosses(g: Graph, c1: Cut, c2: Cut, validate: bool = True) -> bool:
    """Each cut has vertices in two different components of the other's complement."""
    if validate:
        validate_cut(g, c1)
        validate_cut(g, c2)
    if c1 == c2:
        return False
    m1, m2 = c1.mask(g), c2.mask(g)
    result = _crosses_masks(g, m1, _split(g, m1), m2, _split(g, m2))
    if result and c1.kind != c2.kind:
        raise InternalInconsistency(
            "pairs never cross 2-paths", f"{c1.label()} crosses {c2.label()}"
        )
    return result


@dataclass(frozen=True)
class CrossingClasses:
    uncrossed: tuple
    hanging_collections: tuple

    def as_dict(self) -> dict:
        return {
            "uncrossed": [c.as_dict() for c in self.uncrossed],
            "hanging_collections": [[c.as_dict() for c in h] for h in self.hanging_collections],
        }


def crossing_matrix(g: Graph, cuts: list) -> list:
    """Neighbourhood masks of the crossing relation on ``cuts`` (by list index)."""
    masks = [c.mask(g) for c in cuts]
    splits = [_split(g, m) for m in masks]
    rel = [0] * len(cuts)
    for i, j in combinations(range(len(cuts)), 2):
        if _crosses_masks(g, masks[i], splits[i], masks[j], splits[j]):
            rel[i] |= 1 << j
            rel[j] |= 1 << i
    return rel


def crossing_classes(g: Graph, cuts: Optional[list] = None) -> CrossingClasses:
    """Uncrossed cuts and maximal pairwise-crossing collections of each kind."""
    if cuts is None:
        cuts = all_cuts(g)
    rel = crossing_matrix(g, cuts)
    uncrossed = tuple(c for c, r in zip(cuts, rel) if not r)
    collections = []
    for kind in (PAIR, TWO_PATH):
        members = 0
        for k, (c, r) in enumerate(zip(cuts, rel)):
            if c.kind == kind and r:
                members |= 1 << k
        for clique in kernels.maximal_cliques(rel, members):
            collections.append(tuple(cuts[k] for k in kernels.bits(clique)))
        for k in kernels.bits(members):
            for other in kernels.bits(rel[k]):
                if cuts[other].kind != kind:
                    raise InternalInconsistency(
                        "pairs never cross 2-paths",
                        f"{cuts[k].label()} crosses {cuts[other].label()}",
                    )
    collections.sort()
    return CrossingClasses(uncrossed, tuple(collections))


def inseparable_masks(g: Graph, cuts: Optional[list] = None) -> list:
    """Adjacency masks of the inseparability relation on essential vertices."""
    if cuts is None:
        cuts = all_cuts(g)
    ess = essential_mask(g)
    rel = [0] * g.n
    for v in kernels.bits(ess):
        rel[v] = ess & ~(1 << v)
    for cut in cuts:
        removed = cut.mask(g)
        for comp in _split(g, removed):
            inside = comp & ess
            outside = ess & ~removed & ~comp
            for v in kernels.bits(inside):
                rel[v] &= ~outside
    return rel


def inseparability_graph(g: Graph, cuts: Optional[list] = None) -> Graph:
    """Essential vertices, joined when no cut avoiding both puts them apart."""
    rel = inseparable_masks(g, cuts)
    ess = essential_mask(g)
    edges = [
        (g.names[u], g.names[v])
        for u in kernels.bits(ess)
        for v in kernels.bits(rel[u])
        if u < v
    ]
    return Graph.from_edges(edges, g.names_of(ess))


def inseparable_cliques(g: Graph, cuts: Optional[list] = None, min_size: int = 1) -> list:
    """Maximal cliques of the inseparability relation as masks, sorted by names."""
    rel = inseparable_masks(g, cuts)
    out = [c for c in kernels.maximal_cliques(rel, essential_mask(g)) if kernels.popcount(c) >= min_size]
    out.sort(key=g.names_of)
    return out


# -- thick joins -----------------------------------------------------------------

def _require_triangle_free(g: Graph):
    tri = find_triangle(g)
    if tri is not None:
        raise GraphError("triangle found: {" + ",".join(tri) + "}")


def join_masks(g: Graph) -> list:
    """Maximal thick joins as ``(A, B)`` masks; pairs of mutually closed sides.

    The closed sides are the intersections of neighbourhoods, generated by
    intersecting one neighbourhood at a time.
    """
    _require_triangle_free(g)
    seen = set()
    frontier = [m for m in set(g.adj) if kernels.popcount(m) >= 2]
    seen.update(frontier)
    while frontier:
        nxt = []
        for side in frontier:
            for v in range(g.n):
                cut = side & g.adj[v]
                if cut != side and kernels.popcount(cut) >= 2 and cut not in seen:
                    seen.add(cut)
                    nxt.append(cut)
        frontier = nxt
    joins = set()
    for side in seen:
        other = g.common_neighbors(side)
        if kernels.popcount(other) >= 2:
            joins.add(frozenset((side, other)))
    out = []
    for pair in joins:
        a, b = sorted(pair, key=g.names_of)
        out.append((a, b))
    out.sort(key=lambda ab: (g.names_of(ab[0]), g.names_of(ab[1])))
    return out


def maximal_thick_joins(g: Graph) -> list:
    """Inclusion-maximal complete bipartite subgraphs with both sides of size >= 2.

    Each join is ``(A, B)`` as sorted name tuples with ``A < B``.
    """
    return [(g.names_of(a), g.names_of(b)) for a, b in join_masks(g)]


@dataclass(frozen=True, order=True)
class Suspension:
    pole: tuple
    suspended: tuple
    maximal_thick_join: bool

    @property
    def square(self) -> bool:
        return len(self.suspended) == 2

    @property
    def is_maximal_suspension(self) -> bool:
        return self.maximal_thick_join and len(self.suspended) >= 3

    def label(self) -> str:
        return "W_{" + ",".join(self.pole) + "} x W_{" + ",".join(self.suspended) + "}"

    def as_dict(self) -> dict:
        return {
            "pole": list(self.pole),
            "suspended": list(self.suspended),
            "maximal_thick_join": self.maximal_thick_join,
            "square": self.square,
        }


def maximal_suspension_for_pole(g: Graph, pole) -> Optional[Suspension]:
    """The suspension over ``pole``, or None when the pole has < 2 common neighbours.

    The flag ``maximal_thick_join`` is set when pole and suspended set are
    each other's common neighbourhoods.
    """
    a, b = sorted(str(v) for v in pole)
    if g.has_edge(a, b):
        raise GraphError(f"pole {a},{b} is an edge")
    if a == b:
        raise GraphError("pole needs two distinct vertices")
    pm = g.mask((a, b))
    sm = g.common_neighbors(pm)
    if kernels.popcount(sm) < 2:
        return None
    return Suspension((a, b), g.names_of(sm), g.common_neighbors(sm) == pm)


def maximal_suspensions(g: Graph) -> list:
    """Maximal thick joins with a side of size 2 and the other of size >= 3, by pole."""
    out = []
    for a, b in join_masks(g):
        for pole, rest in ((a, b), (b, a)):
            if kernels.popcount(pole) == 2 and kernels.popcount(rest) >= 3:
                out.append(Suspension(g.names_of(pole), g.names_of(rest), True))
    out.sort()
    return out


def pole_pattern_edges(suspended, poles) -> list:
    """Pairs inside ``suspended`` that are themselves poles from ``poles``."""
    inside = set(suspended)
    return sorted(tuple(p) for p in poles if set(p) <= inside)
