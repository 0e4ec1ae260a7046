"""Visual graph of cylinders: cylinders, rigid sets, hanging collections.

Rigid sets are the inseparable sets of at least four essential vertices
that do not sit inside a single cylinder.  A maximal inseparable set that
fills part of one cylinder is replaced by its intersections with the
neighbouring cylinders, which is where the rigid pieces actually attach.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from itertools import combinations
from typing import Optional

from racgtree import kernels, trees
from racgtree.cuts import (
    Suspension,
    all_cuts,
    crossing_classes,
    inseparable_cliques,
    inseparable_masks,
    maximal_suspensions,
    pole_pattern_edges,
)
from racgtree.errors import GraphError
from racgtree.graph import Graph, precondition_gate
from racgtree.squares import square_indices

SCHEMA = "racgtree.goc/1"


@dataclass(frozen=True)
class Cylinder:
    suspension: Suspension
    cuts: tuple

    @property
    def pole(self):
        return self.suspension.pole

    @property
    def vertices(self) -> tuple:
        return tuple(sorted(self.suspension.pole + self.suspension.suspended))

    @property
    def node_id(self) -> str:
        return "C:" + ",".join(self.pole)

    def label(self) -> str:
        return self.suspension.label()


@dataclass(frozen=True)
class GraphOfCylinders:
    """Bipartite decoration of the graph of cylinders.

    ``edges`` joins a cylinder node id to a rigid (``R:...``) or hanging
    (``H<i>``) node id.  The annotation maps are empty until ``annotate``.
    """

    graph: Graph = field(repr=False, compare=False)
    cylinders: tuple
    rigids: tuple
    hangings: tuple
    edges: tuple
    cylinder_types: dict = field(default_factory=dict)
    pole_pattern_forest: dict = field(default_factory=dict)
    rigid_types: dict = field(default_factory=dict)

    @property
    def empty(self) -> bool:
        return not (self.cylinders or self.rigids or self.hangings)

    @staticmethod
    def rigid_id(rigid) -> str:
        return "R:" + ",".join(rigid)

    @staticmethod
    def hanging_id(k: int) -> str:
        return f"H{k}"

    def cylinder(self, pole) -> Cylinder:
        pole = tuple(sorted(pole))
        for cyl in self.cylinders:
            if cyl.pole == pole:
                return cyl
        raise KeyError(pole)

    def neighbors(self, node_id: str) -> tuple:
        out = [b for a, b in self.edges if a == node_id]
        out += [a for a, b in self.edges if b == node_id]
        return tuple(sorted(out))

    def node_ids(self) -> list:
        return (
            [c.node_id for c in self.cylinders]
            + [self.rigid_id(r) for r in self.rigids]
            + [self.hanging_id(k) for k in range(len(self.hangings))]
        )

    def star_centre(self) -> Optional[str]:
        """The cylinder adjacent to every rigid and hanging node, when unique.

        Requires the incidence graph to be a tree, so the other cylinders
        hang off the centre through those nodes.
        """
        nodes = self.node_ids()
        if len(nodes) < 2 or not trees.is_tree(nodes, self.edges):
            return None
        others = {v for v in nodes if not v.startswith("C:")}
        hubs = [c.node_id for c in self.cylinders if others <= set(self.neighbors(c.node_id))]
        return hubs[0] if len(hubs) == 1 else None

    def as_dict(self) -> dict:
        return {
            "schema": SCHEMA,
            "cylinders": [
                {
                    "id": c.node_id,
                    "pole": list(c.pole),
                    "suspended": list(c.suspension.suspended),
                    "label": c.label(),
                    "cuts": [cut.label() for cut in c.cuts],
                    "type": self.cylinder_types.get(c.pole),
                    "pole_pattern_forest": self.pole_pattern_forest.get(c.pole),
                }
                for c in self.cylinders
            ],
            "rigids": [
                {"id": self.rigid_id(r), "vertices": list(r), "type": self.rigid_types.get(r)}
                for r in self.rigids
            ],
            "hangings": [
                {"id": self.hanging_id(k), "cuts": [c.label() for c in h]}
                for k, h in enumerate(self.hangings)
            ],
            "edges": [list(e) for e in self.edges],
        }


def _rigid_masks(g: Graph, cuts: list, cylinder_masks: list) -> list:
    rel = inseparable_masks(g, cuts)

    def inseparable(mask):
        return all((rel[v] | 1 << v) & mask == mask for v in kernels.bits(mask))

    kept = []
    for clique in inseparable_cliques(g, cuts, min_size=4):
        if not any(clique & cyl == clique for cyl in cylinder_masks):
            kept.append(clique)
    extra = []
    for c1, c2 in combinations(cylinder_masks, 2):
        meet = c1 & c2
        if kernels.popcount(meet) < 4 or not inseparable(meet):
            continue
        if any(meet & r == meet for r in kept + extra):
            continue
        extra = [r for r in extra if r & meet != r] + [meet]
    return kept + extra


def graph_of_cylinders(g: Graph) -> GraphOfCylinders:
    report = precondition_gate(g)
    if not report.passed:
        raise GraphError("gate failure: " + "; ".join(report.reasons))
    if report.is_cycle_graph:
        raise GraphError("cycle graph: the decomposition is not defined")
    cuts = all_cuts(g)
    if not cuts:
        # no splitting at all: the trivial decomposition
        return GraphOfCylinders(g, (), (), (), ())
    classes = crossing_classes(g, cuts)

    by_pole = {}
    for cut in classes.uncrossed:
        by_pole.setdefault(cut.pole, []).append(cut)
    cylinders = []
    for pole, pole_cuts in sorted(by_pole.items()):
        pm = g.mask(pole)
        sm = g.common_neighbors(pm)
        flag = kernels.popcount(sm) >= 2 and g.common_neighbors(sm) == pm
        cylinders.append(Cylinder(Suspension(pole, g.names_of(sm), flag), tuple(sorted(pole_cuts))))

    cyl_masks = [g.mask(c.vertices) for c in cylinders]
    rigids = sorted(g.names_of(m) for m in _rigid_masks(g, cuts, cyl_masks))

    edges = []
    for cyl in cylinders:
        for rigid in rigids:
            inside = set(rigid)
            if any(cut.pole == cyl.pole and set(cut.vertices) <= inside for cut in cuts):
                edges.append((cyl.node_id, GraphOfCylinders.rigid_id(rigid)))
        for k, hanging in enumerate(classes.hanging_collections):
            if any(cut.pole == cyl.pole for cut in hanging):
                edges.append((cyl.node_id, GraphOfCylinders.hanging_id(k)))
    return GraphOfCylinders(
        graph=g,
        cylinders=tuple(cylinders),
        rigids=tuple(rigids),
        hangings=classes.hanging_collections,
        edges=tuple(sorted(edges)),
    )


def annotate(goc: GraphOfCylinders) -> GraphOfCylinders:
    """Attach vertex-group types and the pole-pattern forest flag."""
    g = goc.graph
    poles = [s.pole for s in maximal_suspensions(g)]
    cylinder_types = {}
    forest = {}
    for cyl in goc.cylinders:
        size = len(cyl.suspension.suspended)
        cylinder_types[cyl.pole] = (
            "virtually-FxZ" if size >= 3 else "virtually-Z2" if size == 2 else "virtually-Z"
        )
        pattern = pole_pattern_edges(cyl.suspension.suspended, poles)
        forest[cyl.pole] = trees.is_forest(cyl.suspension.suspended, pattern)
    squares = {p | q for p, q in (
        (frozenset(g.names[i] for i in a), frozenset(g.names[i] for i in b))
        for a, b in square_indices(g)
    )}
    rigid_types = {
        r: "square" if frozenset(r) in squares else "non-square" for r in goc.rigids
    }
    return replace(
        goc, cylinder_types=cylinder_types, pole_pattern_forest=forest, rigid_types=rigid_types
    )


def _dot_id(s: str) -> str:
    return '"' + s.replace('"', '\\"') + '"'


def export_goc(goc: GraphOfCylinders, format: str = "dot") -> str:
    if format == "structured":
        return json.dumps(goc.as_dict(), indent=2) + "\n"
    if format == "text":
        lines = []
        for c in goc.cylinders:
            extra = ""
            if c.pole in goc.cylinder_types:
                forest = "forest" if goc.pole_pattern_forest[c.pole] else "not a forest"
                extra = f"  [{goc.cylinder_types[c.pole]}, pole pattern {forest}]"
            lines.append(f"cylinder {c.label()}{extra}")
        for r in goc.rigids:
            extra = f"  [{goc.rigid_types[r]}]" if r in goc.rigid_types else ""
            lines.append("rigid {" + ",".join(r) + "}" + extra)
        for k, h in enumerate(goc.hangings):
            lines.append(f"hanging H{k}: " + " ".join(c.label() for c in h))
        for a, b in goc.edges:
            lines.append(f"edge {a} -- {b}")
        return "\n".join(lines) + ("\n" if lines else "")
    if format != "dot":
        raise ValueError(f"unknown format {format!r}")
    lines = ["graph GOC {"]
    for c in goc.cylinders:
        lines.append(f"  {_dot_id(c.node_id)} [shape=box, label={_dot_id(c.label())}];")
    for r in goc.rigids:
        rid = GraphOfCylinders.rigid_id(r)
        lines.append(f"  {_dot_id(rid)} [shape=ellipse, label={_dot_id('{' + ','.join(r) + '}')}];")
    for k, h in enumerate(goc.hangings):
        label = " ".join(c.label() for c in h)
        lines.append(f"  {_dot_id(GraphOfCylinders.hanging_id(k))} [shape=diamond, label={_dot_id(label)}];")
    for a, b in goc.edges:
        lines.append(f"  {_dot_id(a)} -- {_dot_id(b)};")
    lines.append("}")
    return "\n".join(lines) + "\n"
