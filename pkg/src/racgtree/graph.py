"""Graph value type, parsing and serialization, and the hypothesis gate."""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Mapping, Optional

from racgtree import kernels
from racgtree.errors import GraphError, GraphParseError

_NAME = re.compile(r"[A-Za-z0-9_]+\Z")


@dataclass(frozen=True)
class Graph:
    """Finite simple undirected graph with named vertices.

    Vertex ``i`` is ``names[i]``; names are distinct and sorted, so iterating
    a vertex mask in bit order yields names in lexicographic order.  Edges are
    index pairs ``(i, j)`` with ``i < j``.
    """

    names: tuple
    edges: frozenset
    adj: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        names = tuple(self.names)
        if list(names) != sorted(set(names)):
            raise GraphError("vertex names must be distinct and sorted")
        n = len(names)
        adj = [0] * n
        edges = set()
        for i, j in self.edges:
            if i == j:
                raise GraphError(f"self-loop at {names[i]!r}")
            if not (0 <= i < n and 0 <= j < n):
                raise GraphError(f"edge ({i}, {j}) out of range")
            i, j = min(i, j), max(i, j)
            edges.add((i, j))
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        object.__setattr__(self, "names", names)
        object.__setattr__(self, "edges", frozenset(edges))
        object.__setattr__(self, "adj", tuple(adj))

    @classmethod
    def from_edges(cls, edges: Iterable, vertices: Iterable = ()) -> "Graph":
        """Build from name pairs plus optional isolated vertices."""
        edges = [(str(u), str(v)) for u, v in edges]
        names = set(str(v) for v in vertices)
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at {u!r}")
            names.update((u, v))
        order = sorted(names)
        index = {name: i for i, name in enumerate(order)}
        return cls(tuple(order), frozenset((index[u], index[v]) for u, v in edges))

    def __len__(self):
        return len(self.names)

    @property
    def n(self):
        return len(self.names)

    @cached_property
    def _index(self):
        return {name: i for i, name in enumerate(self.names)}

    @property
    def full(self):
        return (1 << self.n) - 1

    def index(self, name) -> int:
        try:
            return self._index[str(name)]
        except KeyError:
            raise GraphError(f"unknown vertex {name!r}") from None

    def mask(self, names: Iterable) -> int:
        m = 0
        for name in names:
            m |= 1 << self.index(name)
        return m

    def names_of(self, mask: int) -> tuple:
        return tuple(self.names[i] for i in kernels.bits(mask))

    def has_edge(self, u, v) -> bool:
        return bool(self.adj[self.index(u)] >> self.index(v) & 1)

    def neighbors(self, v) -> tuple:
        return self.names_of(self.adj[self.index(v)])

    def degree(self, v) -> int:
        return kernels.popcount(self.adj[self.index(v)])

    def edge_names(self) -> list:
        return sorted((self.names[i], self.names[j]) for i, j in self.edges)

    def common_neighbors(self, mask: int) -> int:
        """Mask of vertices adjacent to every vertex of ``mask``."""
        out = self.full
        for v in kernels.bits(mask):
            out &= self.adj[v]
        return out

    def is_anticlique(self, mask: int) -> bool:
        return all(not (self.adj[v] & mask) for v in kernels.bits(mask))

    def is_connected_mask(self, alive: int) -> bool:
        return len(kernels.components(self.adj, alive)) == 1

    def induced(self, names: Iterable) -> "Graph":
        keep = self.mask(names)
        return Graph.from_edges(
            [(self.names[i], self.names[j]) for i, j in self.edges if keep >> i & 1 and keep >> j & 1],
            self.names_of(keep),
        )


# -- parsing and serialization ------------------------------------------------

def _check_name(name, line=None, column=None):
    if not _NAME.match(name):
        raise GraphParseError(f"invalid vertex name {name!r}", line, column)


def _parse_edge_list(text: str) -> Graph:
    edges = []
    declared = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        tokens = [(m.group(), m.start() + 1) for m in re.finditer(r"\S+", line)]
        if not tokens:
            continue
        if tokens[0][0] == "vertex":
            if len(tokens) != 2:
                col = tokens[2][1] if len(tokens) > 2 else len(line) + 1
                raise GraphParseError("expected 'vertex NAME'", lineno, col)
            name, col = tokens[1]
            _check_name(name, lineno, col)
            if name in declared:
                raise GraphParseError(f"duplicate vertex declaration {name!r}", lineno, col)
            declared.add(name)
            continue
        if len(tokens) != 2:
            col = tokens[2][1] if len(tokens) > 2 else len(line) + 1
            raise GraphParseError("expected 'U V' edge line", lineno, col)
        (u, ucol), (v, vcol) = tokens
        _check_name(u, lineno, ucol)
        _check_name(v, lineno, vcol)
        if u == v:
            raise GraphParseError(f"self-loop at {u!r}", lineno, vcol)
        edges.append((u, v))
    return Graph.from_edges(edges, declared)


def _parse_structured(text: str) -> Graph:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphParseError(exc.msg, exc.lineno, exc.colno) from None
    if not isinstance(doc, dict):
        raise GraphParseError("expected an object with 'edges'")
    vertices = doc.get("vertices", [])
    edges = doc.get("edges", [])
    if not isinstance(vertices, list) or not isinstance(edges, list):
        raise GraphParseError("'vertices' and 'edges' must be arrays")
    names = [str(v) for v in vertices]
    for name in names:
        _check_name(name)
    if len(set(names)) != len(names):
        dup = next(x for x in names if names.count(x) > 1)
        raise GraphParseError(f"duplicate vertex declaration {dup!r}")
    pairs = []
    for k, e in enumerate(edges):
        if not isinstance(e, list) or len(e) != 2:
            raise GraphParseError(f"edge #{k} is not a 2-element array")
        u, v = str(e[0]), str(e[1])
        _check_name(u)
        _check_name(v)
        if u == v:
            raise GraphParseError(f"self-loop at {u!r} (edge #{k})")
        pairs.append((u, v))
    return Graph.from_edges(pairs, names)


def parse_graph(text, format: str = "edge-list") -> Graph:
    """Parse ``text`` (bytes or str) in ``edge-list`` or ``structured`` format."""
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise GraphParseError(f"input is not UTF-8 ({exc.reason})") from None
    if format == "edge-list":
        return _parse_edge_list(text)
    if format == "structured":
        return _parse_structured(text)
    raise ValueError(f"unknown graph format {format!r}")


def format_edge_list(g: Graph) -> str:
    lines = []
    touched = 0
    for i, j in sorted(g.edges, key=lambda e: (g.names[e[0]], g.names[e[1]])):
        touched |= (1 << i) | (1 << j)
    for v in g.names_of(g.full & ~touched):
        lines.append(f"vertex {v}")
    lines.extend(f"{u} {v}" for u, v in g.edge_names())
    return "\n".join(lines) + ("\n" if lines else "")


def graph_to_dict(g: Graph) -> dict:
    return {"vertices": list(g.names), "edges": [list(e) for e in g.edge_names()]}


def format_structured(g: Graph) -> str:
    return json.dumps(graph_to_dict(g), indent=2) + "\n"


# -- basic operations ----------------------------------------------------------

def complement(g: Graph) -> Graph:
    edges = frozenset(
        (i, j) for i, j in combinations(range(g.n), 2) if not g.adj[i] >> j & 1
    )
    return Graph(g.names, edges)


@dataclass(frozen=True)
class VertexProfile:
    vertex: str
    link: tuple
    star: tuple
    essential: bool
    cone: bool


def vertex_profile(g: Graph, v) -> VertexProfile:
    i = g.index(v)
    link = g.adj[i]
    others = g.full & ~(1 << i)
    return VertexProfile(
        vertex=g.names[i],
        link=g.names_of(link),
        star=g.names_of(link | 1 << i),
        essential=kernels.popcount(link) >= 3,
        cone=link == others,
    )


def essential_mask(g: Graph) -> int:
    m = 0
    for v in range(g.n):
        if kernels.popcount(g.adj[v]) >= 3:
            m |= 1 << v
    return m


@dataclass(frozen=True)
class Connectivity:
    components: tuple
    is_biconnected: bool
    articulation_vertices: tuple

    @property
    def connected(self):
        return len(self.components) == 1


def connectivity_suite(g: Graph) -> Connectivity:
    comps = kernels.components(g.adj, g.full)
    cut_vertices = 0
    for v in range(g.n):
        alive = g.full & ~(1 << v)
        if len(kernels.components(g.adj, alive)) > len(comps) - (1 if not g.adj[v] else 0):
            cut_vertices |= 1 << v
    return Connectivity(
        components=tuple(g.names_of(c) for c in comps),
        is_biconnected=len(comps) == 1 and not cut_vertices,
        articulation_vertices=g.names_of(cut_vertices),
    )


def all_cliques(g: Graph, max_size: Optional[int] = None):
    """Yield every nonempty clique as a mask."""
    stack = [(1 << v, g.adj[v] & ~((2 << v) - 1)) for v in range(g.n)]
    while stack:
        clique, ext = stack.pop()
        yield clique
        if max_size is not None and kernels.popcount(clique) >= max_size:
            continue
        for w in kernels.bits(ext):
            stack.append((clique | 1 << w, ext & g.adj[w] & ~((2 << w) - 1)))


def is_triangle_free(g: Graph) -> bool:
    return all(not (g.adj[i] & g.adj[j]) for i, j in g.edges)


def find_triangle(g: Graph):
    for i, j in sorted(g.edges):
        common = g.adj[i] & g.adj[j]
        if common:
            k = (common & -common).bit_length() - 1
            return g.names_of((1 << i) | (1 << j) | (1 << k))
    return None


@dataclass(frozen=True)
class GateReport:
    triangle_free: bool
    incomplete: bool
    connected: bool
    separating_cliques: tuple
    is_cycle_graph: bool

    @property
    def passed(self) -> bool:
        return self.triangle_free and self.incomplete and self.connected and not self.separating_cliques

    @property
    def reasons(self) -> list:
        out = []
        if not self.triangle_free:
            out.append("not triangle-free")
        if not self.incomplete:
            out.append("complete")
        if not self.connected:
            out.append("disconnected")
        for clique in self.separating_cliques:
            out.append("separating clique {" + ",".join(clique) + "}")
        return out


def precondition_gate(g: Graph) -> GateReport:
    """Check the standing hypotheses: incomplete, triangle-free, no separating cliques."""
    triangle_free = is_triangle_free(g)
    complete = len(g.edges) == g.n * (g.n - 1) // 2
    connected = g.n > 0 and g.is_connected_mask(g.full)
    separating = []
    if connected:
        cliques = all_cliques(g, 2 if triangle_free else None)
        for clique in cliques:
            rest = g.full & ~clique
            if rest and not g.is_connected_mask(rest):
                separating.append(clique)
    separating.sort(key=lambda m: (kernels.popcount(m), g.names_of(m)))
    cycle = connected and g.n >= 3 and all(kernels.popcount(a) == 2 for a in g.adj)
    return GateReport(
        triangle_free=triangle_free,
        incomplete=not complete,
        connected=connected,
        separating_cliques=tuple(g.names_of(m) for m in separating),
        is_cycle_graph=cycle,
    )


# -- DOT -------------------------------------------------------------------------

def _dot_id(name) -> str:
    return '"' + str(name).replace("\\", "\\\\").replace('"', '\\"') + '"'


def _dot_attrs(attrs: Optional[Mapping]) -> str:
    if not attrs:
        return ""
    body = ", ".join(f"{k}={_dot_id(v)}" for k, v in sorted(attrs.items()))
    return f" [{body}]"


def export_dot(g: Graph, decorations: Optional[Mapping] = None, name: str = "G") -> str:
    """DOT text with vertices and edges in lexicographic order.

    ``decorations`` maps a vertex name or a sorted name pair to an attribute
    dict; ``"graph"`` maps to graph-level attributes.
    """
    decorations = decorations or {}
    lines = [f"graph {_dot_id(name)} {{"]
    for key, value in sorted((decorations.get("graph") or {}).items()):
        lines.append(f"  {key}={_dot_id(value)};")
    for v in g.names:
        lines.append(f"  {_dot_id(v)}{_dot_attrs(decorations.get(v))};")
    for u, v in g.edge_names():
        lines.append(f"  {_dot_id(u)} -- {_dot_id(v)}{_dot_attrs(decorations.get((u, v)))};")
    lines.append("}")
    return "\n".join(lines) + "\n"
