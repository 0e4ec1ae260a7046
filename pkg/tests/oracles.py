"""Brute-force reference implementations used only by the tests.

Everything here works from the definitions with networkx and exhaustive
subset scans, sharing no code with the package beyond the Graph type.
"""

from itertools import combinations

import networkx as nx

from racgtree.graph import Graph


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(g.names)
    h.add_edges_from(g.edge_names())
    return h


def from_nx(h: nx.Graph) -> Graph:
    return Graph.from_edges([(str(u), str(v)) for u, v in h.edges()], [str(v) for v in h.nodes()])


def disconnects(h: nx.Graph, removed) -> bool:
    rest = h.subgraph(set(h) - set(removed))
    return rest.number_of_nodes() > 0 and not nx.is_connected(rest)


def components_after(h: nx.Graph, removed):
    rest = h.subgraph(set(h) - set(removed))
    return sorted(tuple(sorted(c)) for c in nx.connected_components(rest))


def triangle_free(h) -> bool:
    return sum(nx.triangles(h).values()) == 0


def gate_passes(h: nx.Graph) -> bool:
    n = h.number_of_nodes()
    if n == 0 or not nx.is_connected(h) or not triangle_free(h):
        return False
    if h.number_of_edges() == n * (n - 1) // 2:
        return False
    for k in (1, 2):
        for s in combinations(h.nodes, k):
            if k == 2 and not h.has_edge(*s):
                continue
            if disconnects(h, s):
                return False
    return True


def separating_small_sets(h: nx.Graph):
    """Cliques of size <= 2 whose removal disconnects ``h``."""
    out = []
    for k in (1, 2):
        for s in combinations(sorted(h.nodes), k):
            if (k == 1 or h.has_edge(*s)) and disconnects(h, s):
                out.append(s)
    return out


def cut_pairs(h):
    return sorted(
        (a, b) for a, b in combinations(sorted(h.nodes), 2)
        if not h.has_edge(a, b) and disconnects(h, (a, b))
    )


def cut_two_paths(h):
    pairs = set(cut_pairs(h))
    out = []
    for a, b in combinations(sorted(h.nodes), 2):
        if h.has_edge(a, b) or (a, b) in pairs:
            continue
        for c in sorted(set(h[a]) & set(h[b])):
            if disconnects(h, (a, b, c)):
                out.append((a, c, b))
    return out


def all_cut_sets(h):
    return [set(p) for p in cut_pairs(h)] + [set(t) for t in cut_two_paths(h)]


def is_anticlique(h, s) -> bool:
    return all(not h.has_edge(u, v) for u, v in combinations(s, 2))


def _anticliques(h, pool):
    pool = sorted(pool)
    for k in range(2, len(pool) + 1):
        for s in combinations(pool, k):
            if is_anticlique(h, s):
                yield frozenset(s)


def thick_joins(h):
    """All maximal complete bipartite (A, B), both sides anticliques of size >= 2.

    A join is maximal when no outside vertex can be added to either side.
    """
    nodes = set(h.nodes)
    found = set()
    for a in _anticliques(h, nodes):
        common = set.intersection(*(set(h[x]) for x in a))
        for b in _anticliques(h, common):
            rest = nodes - a - b
            grows = any(
                (is_anticlique(h, a | {x}) and all(h.has_edge(x, y) for y in b))
                or (is_anticlique(h, b | {x}) and all(h.has_edge(x, y) for y in a))
                for x in rest
            )
            if not grows:
                found.add(frozenset((a, b)))
    out = []
    for pair in found:
        a, b = sorted(tuple(sorted(side)) for side in pair)
        out.append((a, b))
    return sorted(out)


def max_suspensions(h):
    out = []
    for a, b in thick_joins(h):
        if len(a) == 2 and len(b) >= 3:
            out.append((a, b))
        elif len(b) == 2 and len(a) >= 3:
            out.append((b, a))
    return sorted(out)


def induced_squares(h):
    out = set()
    for quad in combinations(sorted(h.nodes), 4):
        sub = h.subgraph(quad)
        if sub.number_of_edges() == 4 and all(d == 2 for _, d in sub.degree()):
            a = quad[0]
            c = next(x for x in quad[1:] if not h.has_edge(a, x))
            b, d = sorted(set(quad) - {a, c})
            p, q = tuple(sorted((a, c))), (b, d)
            out.add((min(p, q), max(p, q)))
    return sorted(out)


def essential(h):
    return sorted(v for v in h if h.degree(v) >= 3)


def separated(h, s, cuts) -> bool:
    for c in cuts:
        rest = set(s) - c
        comps = nx.connected_components(h.subgraph(set(h) - c))
        if sum(1 for comp in comps if comp & rest) >= 2:
            return True
    return False


def inseparable_sets(h, min_size=4):
    """Maximal sets of essential vertices no cut separates, by subset scan."""
    cuts = all_cut_sets(h)
    ess = essential(h)
    good = [
        frozenset(s)
        for k in range(1, len(ess) + 1)
        for s in combinations(ess, k)
        if not separated(h, s, cuts)
    ]
    maximal = [s for s in good if not any(s < t for t in good)]
    return sorted(tuple(sorted(s)) for s in maximal if len(s) >= min_size)


def is_square(h, s) -> bool:
    sub = h.subgraph(s)
    return len(s) == 4 and sub.number_of_edges() == 4 and all(d == 2 for _, d in sub.degree())


def conditions_hold(h) -> bool:
    """Suspension, rigid-square and pole-forest conditions plus >= 2 suspensions."""
    joins = thick_joins(h)
    if any(not (2 in (len(a), len(b)) and max(len(a), len(b)) >= 3) for a, b in joins):
        return False
    sus = max_suspensions(h)
    poles = {p for p, _ in sus}
    if len(sus) < 2:
        return False
    for v in h:
        if not any(v in p or v in c for p, c in sus):
            return False
    for u, v in h.edges:
        if not any((u in p and v in c) or (v in p and u in c) for p, c in sus):
            return False
    cut_poles = {tuple(sorted(p)) for p in cut_pairs(h)} | {
        tuple(sorted((a, b))) for a, _, b in cut_two_paths(h)
    }
    if poles - cut_poles or cut_poles - poles:
        return False
    for s in inseparable_sets(h):
        if len(s) > 4 and any(set(s) <= set(p) | set(c) for p, c in sus):
            continue
        if not is_square(h, s):
            return False
        diags = [tuple(sorted(d)) for d in combinations(s, 2) if not h.has_edge(*d)]
        if any(d not in poles for d in diags):
            return False
    for p, c in sus:
        pattern = nx.Graph()
        pattern.add_nodes_from(c)
        pattern.add_edges_from(q for q in poles if set(q) <= set(c))
        if not nx.is_forest(pattern):
            return False
    return True


def word_bfs_normal_form(h, word):
    """Shortest, then lexicographically least, word reachable by the relations.

    Moves: delete two equal adjacent letters, swap two adjacent letters that
    are joined by an edge.  Letters compare by their sort order in ``h``.
    """
    start = tuple(word)
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for w in frontier:
            for i in range(len(w) - 1):
                x, y = w[i], w[i + 1]
                moves = []
                if x == y:
                    moves.append(w[:i] + w[i + 2:])
                elif h.has_edge(x, y):
                    moves.append(w[:i] + (y, x) + w[i + 2:])
                for m in moves:
                    if m not in seen:
                        seen.add(m)
                        nxt.append(m)
        frontier = nxt
    best = min(len(w) for w in seen)
    order = {v: k for k, v in enumerate(sorted(h.nodes))}
    return min((w for w in seen if len(w) == best), key=lambda w: [order[x] for x in w])


def artin_bfs_normal_form(h, word):
    """Same search for signed letters: cancel ``x x^-1``, swap commuting letters."""
    start = tuple(word)
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for w in frontier:
            for i in range(len(w) - 1):
                (x, e), (y, f) = w[i], w[i + 1]
                moves = []
                if x == y and e == -f:
                    moves.append(w[:i] + w[i + 2:])
                elif x != y and h.has_edge(x, y):
                    moves.append(w[:i] + (w[i + 1], w[i]) + w[i + 2:])
                for m in moves:
                    if m not in seen:
                        seen.add(m)
                        nxt.append(m)
        frontier = nxt
    best = min(len(w) for w in seen)
    order = {v: k for k, v in enumerate(sorted(h.nodes))}
    return min((w for w in seen if len(w) == best), key=lambda w: [(order[x], -e) for x, e in w])


def tree_hull(tree: nx.Graph, subset):
    """Union of tree paths between all pairs of ``subset``."""
    subset = list(subset)
    out = set(subset)
    for u, v in combinations(subset, 2):
        out.update(nx.shortest_path(tree, u, v))
    return out
