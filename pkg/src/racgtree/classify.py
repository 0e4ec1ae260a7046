"""Decide whether the Coxeter group of a graph is quasiisometric to a tree RAAG.

Three checks run in a fixed order so the reported obstruction is stable:

* ``check_suspension_structure``: maximal thick joins are suspensions over
  at least three points, they cover the graph, and poles and cuts match up;
* ``check_rigid_squares``: rigid pieces are squares whose diagonals are poles;
* ``check_no_pole_cycles``: inside each suspended set the poles form a forest.

A graph passing all three with at least two maximal suspensions gets a YES
verdict together with the construction.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Union

from racgtree import kernels, trees
from racgtree.construction import (
    FidlConstruction,
    assemble,
    verify_cycle_square_condition,
    verify_hull_join_condition,
)
from racgtree.cuts import (
    Cut,
    all_cuts,
    inseparable_cliques,
    maximal_suspensions,
    maximal_thick_joins,
    pole_pattern_edges,
)
from racgtree.errors import InternalInconsistency
from racgtree.graph import GateReport, Graph, precondition_gate

YES, NO, GATE_FAIL = "YES", "NO", "GATE_FAIL"


def _set(names) -> str:
    return "{" + ",".join(names) + "}"


@dataclass(frozen=True)
class NonSuspensionThickJoin:
    join: tuple

    def describe(self):
        return f"maximal thick join {_set(self.join[0])}*{_set(self.join[1])} has no side of size 2"


@dataclass(frozen=True)
class SquareMaximalThickJoin:
    join: tuple

    def describe(self):
        return f"maximal thick join {_set(self.join[0])}*{_set(self.join[1])} is a square"


@dataclass(frozen=True)
class UncoveredVertexOrEdge:
    item: tuple

    @property
    def kind(self):
        return "vertex" if len(self.item) == 1 else "edge"

    def describe(self):
        return f"{self.kind} {','.join(self.item)} lies in no maximal suspension"


@dataclass(frozen=True)
class PoleWithoutCut:
    pole: tuple

    def describe(self):
        return f"pole {_set(self.pole)} gives no cut"


@dataclass(frozen=True)
class CutNotFromPole:
    cut: Cut

    def describe(self):
        return f"cut {self.cut.label()} does not come from a pole"


@dataclass(frozen=True)
class RigidNotSquare:
    vertices: tuple

    def describe(self):
        return f"rigid set {_set(self.vertices)} is not an induced square"


@dataclass(frozen=True)
class RigidDiagonalNotPole:
    vertices: tuple
    diagonal: tuple

    def describe(self):
        return f"diagonal {_set(self.diagonal)} of rigid square {_set(self.vertices)} is not a pole"


@dataclass(frozen=True)
class SuspensionCycle:
    pole: tuple
    cycle: tuple

    def describe(self):
        return f"poles inside the suspension over {_set(self.pole)} form the cycle {'-'.join(self.cycle)}"


@dataclass(frozen=True)
class TooFewSuspensions:
    count: int

    def describe(self):
        return f"only {self.count} maximal suspension(s); at least 2 are needed"


Obstruction = Union[
    NonSuspensionThickJoin,
    SquareMaximalThickJoin,
    UncoveredVertexOrEdge,
    PoleWithoutCut,
    CutNotFromPole,
    RigidNotSquare,
    RigidDiagonalNotPole,
    SuspensionCycle,
    TooFewSuspensions,
]


def obstruction_dict(ob) -> dict:
    out = {"type": type(ob).__name__, "description": ob.describe()}
    for key, value in vars(ob).items():
        out[key] = value.as_dict() if isinstance(value, Cut) else value
    return out


# -- the three checks --------------------------------------------------------------

def check_suspension_structure(g: Graph) -> Optional[Obstruction]:
    """Joins, coverage, poles giving cuts, cuts coming from poles; first failure wins."""
    for a, b in maximal_thick_joins(g):
        if len(a) != 2 and len(b) != 2:
            return NonSuspensionThickJoin((a, b))
        if len(a) == 2 and len(b) == 2:
            return SquareMaximalThickJoin((a, b))
    sus = maximal_suspensions(g)
    covered = 0
    edge_cover = set()
    for s in sus:
        pm, sm = g.mask(s.pole), g.mask(s.suspended)
        covered |= pm | sm
        for u in kernels.bits(pm):
            for v in kernels.bits(sm):
                edge_cover.add((min(u, v), max(u, v)))
    for v in range(g.n):
        if not covered >> v & 1:
            return UncoveredVertexOrEdge((g.names[v],))
    for i, j in sorted(g.edges):
        if (i, j) not in edge_cover:
            return UncoveredVertexOrEdge((g.names[i], g.names[j]))
    cuts = all_cuts(g)
    cut_poles = {c.pole for c in cuts}
    poles = {s.pole for s in sus}
    for s in sus:
        if s.pole not in cut_poles:
            return PoleWithoutCut(s.pole)
    for c in cuts:
        if c.pole not in poles:
            return CutNotFromPole(c)
    return None


def check_rigid_squares(g: Graph) -> Optional[Obstruction]:
    """Each rigid piece is an induced square with both diagonals poles.

    A maximal inseparable set of more than four vertices that fits inside a
    single maximal suspension is part of that cylinder rather than a rigid
    piece, and is skipped.
    """
    sus = maximal_suspensions(g)
    poles = {s.pole for s in sus}
    cylinders = [g.mask(s.pole + s.suspended) for s in sus]
    for clique in inseparable_cliques(g, min_size=4):
        size = kernels.popcount(clique)
        if size > 4 and any(clique & c == clique for c in cylinders):
            continue
        members = g.names_of(clique)
        if size != 4:
            return RigidNotSquare(members)
        verts = list(kernels.bits(clique))
        degrees = [kernels.popcount(g.adj[v] & clique) for v in verts]
        if degrees != [2, 2, 2, 2]:
            return RigidNotSquare(members)
        diagonals = sorted(
            (g.names[u], g.names[v]) for u in verts for v in verts if u < v and not g.adj[u] >> v & 1
        )
        if len(diagonals) != 2:
            return RigidNotSquare(members)
        for d in diagonals:
            if d not in poles:
                return RigidDiagonalNotPole(members, d)
    return None


def _canonical_cycle(cycle: list) -> tuple:
    k = cycle.index(min(cycle))
    cyc = cycle[k:] + cycle[:k]
    if len(cyc) > 2 and cyc[-1] < cyc[1]:
        cyc = [cyc[0]] + cyc[:0:-1]
    return tuple(cyc)


def check_no_pole_cycles(g: Graph) -> Optional[Obstruction]:
    """For each maximal suspension, suspended pairs that are poles form a forest."""
    sus = maximal_suspensions(g)
    poles = [s.pole for s in sus]
    for s in sus:
        edges = pole_pattern_edges(s.suspended, poles)
        cycle = trees.find_cycle(trees.adjacency(s.suspended, edges))
        if cycle is not None:
            return SuspensionCycle(s.pole, _canonical_cycle(cycle))
    return None


# -- verdict ----------------------------------------------------------------------

@dataclass(frozen=True)
class Classification:
    verdict: str
    gate: GateReport
    obstruction: Optional[Obstruction] = None
    construction: Optional[FidlConstruction] = field(default=None, repr=False)

    @property
    def reasons(self) -> list:
        return self.gate.reasons

    def as_dict(self) -> dict:
        out = {"schema": "racgtree.classification/1", "verdict": self.verdict}
        if self.verdict == GATE_FAIL:
            out["reasons"] = self.reasons
        if self.obstruction is not None:
            out["obstruction"] = obstruction_dict(self.obstruction)
        if self.construction is not None:
            delta = self.construction.commuting
            out["commuting_graph"] = {
                "vertices": list(delta.names),
                "edges": [list(e) for e in delta.edge_names()],
            }
        return out


CHECKS = (check_suspension_structure, check_rigid_squares, check_no_pole_cycles)


def classify(g: Graph, certify: bool = True, max_cycle_len: Optional[int] = None) -> Classification:
    """Total decision procedure: gate, the three checks, then the construction.

    With ``certify`` the hull conditions are re-verified on every YES and a
    failure raises ``InternalInconsistency``.
    """
    gate = precondition_gate(g)
    if not gate.passed:
        return Classification(GATE_FAIL, gate)
    for check in CHECKS:
        ob = check(g)
        if ob is not None:
            return Classification(NO, gate, ob)
    count = len(maximal_suspensions(g))
    if count < 2:
        return Classification(NO, gate, TooFewSuspensions(count))
    fidl = assemble(g)
    if certify:
        bad = verify_hull_join_condition(g, fidl)
        if bad is not None:
            raise InternalInconsistency("hull join condition holds", repr(bad))
        bad = verify_cycle_square_condition(g, fidl, max_cycle_len)
        if bad is not None:
            raise InternalInconsistency("cycle square condition holds", repr(bad))
    return Classification(YES, gate, None, fidl)
