"""Build the commuting tree and its generator map, and verify the hull conditions.

The pipeline runs on graphs that already passed the suspension, rigid and
pole-cycle checks.  Every structural fact the decision procedure promises
is re-checked on the way and reported as ``InternalInconsistency`` if it
fails, so a bad verdict cannot silently produce a bogus subgroup.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Optional

from racgtree import kernels, trees
from racgtree.cuts import maximal_suspensions
from racgtree.errors import BoundExceeded, GraphError, InternalInconsistency
from racgtree.graph import Graph
from racgtree.squares import DiagonalGraph, diagonal_graph, induced_squares

SCHEMA = "racgtree.construction/1"


def _pair(a, b) -> tuple:
    return (a, b) if a <= b else (b, a)


def pair_name(pair) -> str:
    return ",".join(pair)


def _fail(claim, detail=""):
    raise InternalInconsistency(claim, detail)


# -- suspension tree -----------------------------------------------------------

@dataclass(frozen=True)
class SuspensionTree:
    """Poles of maximal suspensions, joined when together they span a square."""

    vertices: tuple
    edges: tuple
    suspended: dict = field(compare=False)


def build_suspension_tree(g: Graph, dg: Optional[DiagonalGraph] = None) -> SuspensionTree:
    if dg is None:
        dg = diagonal_graph(g)
    sus = maximal_suspensions(g)
    poles = {s.pole for s in sus}
    for p, q in dg.edges:
        if p not in poles and q not in poles:
            _fail("every square has a pole diagonal", f"{{{pair_name(p)}}}*{{{pair_name(q)}}}")
    if not dg.is_tree():
        _fail("diagonal graph is a tree", f"{len(dg.vertices)} vertices, {len(dg.edges)} edges")
    inner = {v for v in dg.vertices if dg.degree(v) > 1}
    if inner != poles:
        _fail(
            "suspension tree is the diagonal graph minus its leaves",
            "poles " + " ".join(sorted(map(pair_name, poles)))
            + " vs inner " + " ".join(sorted(map(pair_name, inner))),
        )
    for p in sorted(poles):
        if dg.degree(p) < 3:
            _fail("every pole has at least three diagonal neighbours", pair_name(p))
    edges = tuple(e for e in dg.edges if e[0] in poles and e[1] in poles)
    return SuspensionTree(tuple(sorted(poles)), edges, {s.pole: s.suspended for s in sus})


# -- colouring ----------------------------------------------------------------

def two_color(dg: DiagonalGraph, root=None) -> dict:
    """Proper 2-colouring of a tree diagonal graph with ``root`` coloured 0."""
    if not dg.is_tree():
        _fail("diagonal graph is a tree")
    if root is None:
        root = dg.vertices[0]
    return {v: d % 2 for v, d in trees.distances(dg.adj, root).items()}


def vertex_colors(g: Graph, diag_colors: dict) -> dict:
    """Colour each vertex of ``g`` like the diagonals that contain it."""
    out = {}
    for pair, colour in sorted(diag_colors.items()):
        for v in pair:
            if out.setdefault(v, colour) != colour:
                _fail("vertex colouring is well defined", f"vertex {v}")
    missing = [v for v in g.names if v not in out]
    if missing:
        _fail("every vertex is suspended somewhere", f"vertex {missing[0]}")
    return out


# -- per-pole trees --------------------------------------------------------------

@dataclass(frozen=True)
class PoleTree:
    """Spanning tree on the suspended set of one pole."""

    pole: tuple
    vertices: tuple
    mandatory: tuple
    discretionary: tuple

    @property
    def edges(self) -> tuple:
        return tuple(sorted(self.mandatory + self.discretionary))


def build_pole_tree(g: Graph, tree: SuspensionTree, pole) -> PoleTree:
    """Mandatory edges are suspended pairs that are poles themselves.

    Remaining components are joined by scanning pairs in lexicographic order
    and keeping each pair that links two components.
    """
    pole = tuple(sorted(pole))
    if pole not in tree.suspended:
        raise GraphError(f"{pair_name(pole)} is not a pole of the suspension tree")
    members = tree.suspended[pole]
    poles = set(tree.vertices)
    mandatory = tuple(p for p in combinations(members, 2) if p in poles)
    uf = trees.UnionFind(members)
    for a, b in mandatory:
        if not uf.union(a, b):
            _fail("mandatory edges form a forest", f"pole {pair_name(pole)}, edge {a},{b}")
    discretionary = tuple(p for p in combinations(members, 2) if p not in poles and uf.union(*p))
    return PoleTree(pole, members, mandatory, discretionary)


# -- the two trees and their hulls ----------------------------------------------

@dataclass(frozen=True)
class VertexTree:
    vertices: tuple
    edges: tuple

    @cached_property
    def adj(self) -> dict:
        return trees.adjacency(self.vertices, self.edges)

    def hull(self, subset) -> tuple:
        """Smallest subtree containing ``subset``."""
        subset = set(subset)
        if not subset:
            return ()
        if not subset <= set(self.vertices):
            raise GraphError("hull: vertices outside the tree: " + ",".join(sorted(subset - set(self.vertices))))
        start = min(subset)
        reach = trees.distances(self.adj, start)
        if not subset <= reach.keys():
            raise GraphError("hull: vertices lie in different components")
        keep = set(reach)
        degree = {v: len(self.adj[v]) for v in keep}
        stack = [v for v in keep if degree[v] <= 1 and v not in subset]
        while stack:
            v = stack.pop()
            keep.discard(v)
            for w in self.adj[v]:
                if w in keep:
                    degree[w] -= 1
                    if degree[w] == 1 and w not in subset:
                        stack.append(w)
        return tuple(sorted(keep))


def hull(tree: VertexTree, subset) -> tuple:
    return tree.hull(subset)


@dataclass(frozen=True)
class FidlConstruction:
    """Everything the construction produces, in the order it is built."""

    graph: Graph = field(repr=False)
    diagonal: DiagonalGraph
    suspension_tree: SuspensionTree
    diagonal_colors: dict
    vertex_colors: dict
    pole_trees: dict
    tree0: VertexTree
    tree1: VertexTree
    commuting: Graph
    generator_map: dict

    @property
    def discretionary_count(self) -> int:
        return sum(len(t.discretionary) for t in self.pole_trees.values())

    def tree(self, colour: int) -> VertexTree:
        return self.tree1 if colour else self.tree0

    def hull(self, subset) -> tuple:
        """Hull of a possibly two-coloured set: per-colour hulls, united."""
        subset = set(subset)
        zero = {v for v in subset if v in self.tree0.adj}
        one = {v for v in subset if v in self.tree1.adj}
        if zero | one != subset:
            raise GraphError("hull: vertices outside both trees")
        return tuple(sorted(set(self.tree0.hull(zero)) | set(self.tree1.hull(one))))

    def generator_lines(self) -> list:
        return [f"x_{{{k}}} = {a} {b}" for k, (a, b) in sorted(self.generator_map.items())]

    def as_dict(self) -> dict:
        def edge_list(edges):
            return [list(e) for e in edges]

        return {
            "schema": SCHEMA,
            "graph": {"vertices": list(self.graph.names), "edges": edge_list(self.graph.edge_names())},
            "diagonal_graph": self.diagonal.as_dict(),
            "suspension_tree": {
                "vertices": edge_list(self.suspension_tree.vertices),
                "edges": [[list(p), list(q)] for p, q in self.suspension_tree.edges],
            },
            "vertex_colors": dict(sorted(self.vertex_colors.items())),
            "pole_trees": [
                {
                    "pole": list(t.pole),
                    "vertices": list(t.vertices),
                    "mandatory": edge_list(t.mandatory),
                    "discretionary": edge_list(t.discretionary),
                }
                for _, t in sorted(self.pole_trees.items())
            ],
            "tree0": {"vertices": list(self.tree0.vertices), "edges": edge_list(self.tree0.edges)},
            "tree1": {"vertices": list(self.tree1.vertices), "edges": edge_list(self.tree1.edges)},
            "commuting_graph": {
                "vertices": list(self.commuting.names),
                "edges": edge_list(self.commuting.edge_names()),
            },
            "generator_map": {k: list(v) for k, v in sorted(self.generator_map.items())},
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2) + "\n"


def commuting_graph(edges, g: Graph) -> Graph:
    """One vertex per tree edge; adjacent when the four ends span an induced square."""
    edges = sorted(_pair(*e) for e in edges)
    names = [pair_name(e) for e in edges]
    links = []
    for (i, e), (j, f) in combinations(enumerate(edges), 2):
        if set(e) & set(f):
            continue
        (a, b), (c, d) = e, f
        if g.has_edge(a, b) or g.has_edge(c, d):
            continue
        if all(g.has_edge(x, y) for x in e for y in f):
            links.append((names[i], names[j]))
    return Graph.from_edges(links, names)


def _check_tree(g: Graph, name: str, tree: VertexTree, colour: int, colours: dict):
    for v in tree.vertices:
        if v not in colours:
            _fail(f"{name} lies in the graph", f"vertex {v}")
    if not trees.is_tree(tree.vertices, tree.edges):
        _fail(f"{name} is a tree", f"{len(tree.vertices)} vertices, {len(tree.edges)} edges")
    for v in tree.vertices:
        if colours[v] != colour:
            _fail(f"{name} is monochromatic", f"vertex {v}")
    for a, b in tree.edges:
        if g.has_edge(a, b):
            _fail(f"{name} lies in the complement graph", f"edge {a},{b}")


def check_trees(g: Graph, tree0: VertexTree, tree1: VertexTree, colours: dict) -> None:
    """Both trees valid, disjoint and together spanning ``g``."""
    _check_tree(g, "tree0", tree0, 0, colours)
    _check_tree(g, "tree1", tree1, 1, colours)
    if set(tree0.vertices) & set(tree1.vertices):
        _fail("tree0 and tree1 are disjoint")
    if set(tree0.vertices) | set(tree1.vertices) != set(g.names):
        missing = sorted(set(g.names) - set(tree0.vertices) - set(tree1.vertices))
        _fail("tree0 and tree1 span the graph", f"vertex {missing[0]}")


def check_commuting(delta: Graph) -> None:
    adj = trees.adjacency(delta.names, delta.edge_names())
    if not trees.is_tree(delta.names, delta.edge_names()):
        _fail("commuting graph is a tree")
    if trees.diameter(adj) < 3:
        _fail("commuting graph has diameter at least 3")


def assemble(g: Graph) -> FidlConstruction:
    """Run the whole construction on a graph that satisfies the decision checks."""
    dg = diagonal_graph(g)
    tree = build_suspension_tree(g, dg)
    if len(tree.vertices) < 2:
        _fail("at least two maximal suspensions")
    diag_colors = two_color(dg, tree.vertices[0])
    colours = vertex_colors(g, diag_colors)

    pole_trees = {p: build_pole_tree(g, tree, p) for p in tree.vertices}
    halves = []
    for colour in (0, 1):
        # a pole of one colour suspends vertices of the other colour
        edges = set()
        verts = set()
        for p, t in pole_trees.items():
            if diag_colors[p] != colour:
                edges.update(t.edges)
                verts.update(t.vertices)
        halves.append(VertexTree(tuple(sorted(verts)), tuple(sorted(edges))))
    tree0, tree1 = halves
    check_trees(g, tree0, tree1, colours)

    all_edges = sorted(set(tree0.edges) | set(tree1.edges))
    delta = commuting_graph(all_edges, g)
    discretionary = sum(len(t.discretionary) for t in pole_trees.values())
    if delta.n != len(tree.vertices) + discretionary:
        _fail("commuting graph has one vertex per pole and per added edge", f"{delta.n} vertices")
    check_commuting(delta)
    return FidlConstruction(
        graph=g,
        diagonal=dg,
        suspension_tree=tree,
        diagonal_colors=diag_colors,
        vertex_colors=colours,
        pole_trees=pole_trees,
        tree0=tree0,
        tree1=tree1,
        commuting=delta,
        generator_map={pair_name(e): e for e in all_edges},
    )


# -- hull conditions ------------------------------------------------------------------

@dataclass(frozen=True)
class SquareViolation:
    square: tuple
    missing_edge: tuple


def verify_hull_join_condition(g: Graph, fidl: FidlConstruction) -> Optional[SquareViolation]:
    """Every induced square's diagonal hulls must be completely joined in ``g``.

    Returns the first failing square (in sorted order) or None.
    """
    for p, q in induced_squares(g):
        hp, hq = fidl.hull(p), fidl.hull(q)
        for x in hp:
            for y in hq:
                if not g.has_edge(x, y):
                    return SquareViolation((p, q), _pair(x, y))
    return None


@dataclass(frozen=True)
class CycleViolation:
    cycle: tuple
    edge: tuple


def _has_square_on_edge(g: Graph, a: int, b: int, hull_mask: int) -> bool:
    # a' ranges over neighbours of b in the hull, b' over neighbours of a
    for a2 in kernels.bits(g.adj[b] & hull_mask & ~g.adj[a] & ~(1 << a)):
        if g.adj[a] & g.adj[a2] & hull_mask & ~g.adj[b] & ~(1 << b):
            return True
    return False


def verify_cycle_square_condition(
    g: Graph, fidl: FidlConstruction, max_cycle_len: Optional[int] = None
) -> Optional[CycleViolation]:
    """Each edge of each induced cycle lies in a square inside the cycle's hull.

    Induced cycles up to ``max_cycle_len`` (default: the vertex count) are
    checked; a longer induced cycle raises ``BoundExceeded``.
    """
    bound = g.n if max_cycle_len is None else max_cycle_len
    cycles, exceeded = kernels.induced_cycles(g.adj, g.n, bound)
    if exceeded:
        raise BoundExceeded(bound)
    for cyc in sorted(cycles):
        hull_mask = g.mask(fidl.hull(g.names[v] for v in cyc))
        k = len(cyc)
        for i in range(k):
            a, b = cyc[i], cyc[(i + 1) % k]
            if not _has_square_on_edge(g, a, b, hull_mask):
                return CycleViolation(
                    tuple(g.names[v] for v in cyc), _pair(g.names[a], g.names[b])
                )
    return None


def fidl_from_dict(doc: dict):
    """Rebuild ``(graph, construction)`` from the structured construct output.

    The diagonal graph and the commuting graph are recomputed from the graph
    and the two trees; the stored commuting graph is returned separately so
    a caller can compare it.
    """
    if doc.get("schema") != SCHEMA:
        raise GraphError(f"expected schema {SCHEMA!r}")
    try:
        g = Graph.from_edges(doc["graph"]["edges"], doc["graph"]["vertices"])
        trees_ = [
            VertexTree(
                tuple(doc[k]["vertices"]),
                tuple(sorted(_pair(*e) for e in doc[k]["edges"])),
            )
            for k in ("tree0", "tree1")
        ]
        colours = {str(k): int(v) for k, v in doc["vertex_colors"].items()}
        stored = Graph.from_edges(
            doc["commuting_graph"]["edges"], doc["commuting_graph"]["vertices"]
        )
        gen_map = {k: tuple(v) for k, v in doc["generator_map"].items()}
    except (KeyError, TypeError, ValueError) as exc:
        raise GraphError(f"malformed construction: {exc}") from None
    return g, construction_from_trees(g, trees_[0], trees_[1], colours, gen_map), stored


def construction_from_trees(g: Graph, tree0, tree1, colours=None, generator_map=None) -> FidlConstruction:
    """Wrap two given vertex trees as a construction so the checks can run on it.

    Trees may be VertexTree values or plain edge lists.  Nothing about the
    trees is validated here; use ``check_trees`` for that.
    """
    halves = []
    for t in (tree0, tree1):
        if not isinstance(t, VertexTree):
            edges = tuple(sorted(_pair(*e) for e in t))
            t = VertexTree(tuple(sorted({v for e in edges for v in e})), edges)
        halves.append(t)
    if colours is None:
        colours = {v: c for c, t in enumerate(halves) for v in t.vertices}
    all_edges = sorted(set(halves[0].edges) | set(halves[1].edges))
    if generator_map is None:
        generator_map = {pair_name(e): e for e in all_edges}
    return FidlConstruction(
        graph=g,
        diagonal=diagonal_graph(g),
        suspension_tree=SuspensionTree((), (), {}),
        diagonal_colors={},
        vertex_colors=colours,
        pole_trees={},
        tree0=halves[0],
        tree1=halves[1],
        commuting=commuting_graph(all_edges, g),
        generator_map=generator_map,
    )
