"""Pure-Python bitmask kernels.

Vertices are integers ``0..n-1`` and vertex sets are Python ints used as
bitmasks.  ``adj[v]`` is the neighbourhood mask of ``v``.  The compiled
module ``_ckernels`` exposes the same functions for graphs with at most 64
vertices; ``racgtree.kernels`` picks between the two.
"""


def bits(mask):
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def components(adj, alive):
    """Connected components of the subgraph induced on ``alive``.

    Returned as a list of masks ordered by their lowest vertex.
    """
    comps = []
    rest = alive
    while rest:
        low = rest & -rest
        comp = low
        frontier = low
        while frontier:
            reach = 0
            for v in bits(frontier):
                reach |= adj[v]
            frontier = reach & rest & ~comp
            comp |= frontier
        comps.append(comp)
        rest &= ~comp
    return comps


def induced_squares(adj, n):
    """All induced 4-cycles as ``(a, c, b, d)`` with diagonals ``{a,c}``, ``{b,d}``.

    ``a`` is the least vertex of the square and ``b < d``, so each square is
    reported exactly once.
    """
    out = []
    for a in range(n):
        na = adj[a]
        above = ~((1 << (a + 1)) - 1)
        nbrs = list(bits(na & above))
        for i, b in enumerate(nbrs):
            for d in nbrs[i + 1:]:
                if adj[b] >> d & 1:
                    continue
                opposite = adj[b] & adj[d] & above & ~na
                for c in bits(opposite):
                    out.append((a, c, b, d))
    return out


def maximal_cliques(adj, candidates):
    """Bron-Kerbosch with pivoting, restricted to the vertex mask ``candidates``."""
    out = []

    def expand(r, p, x):
        if not p and not x:
            out.append(r)
            return
        pivot_pool = p | x
        best = -1
        best_count = -1
        for u in bits(pivot_pool):
            c = bin(p & adj[u]).count("1")
            if c > best_count:
                best, best_count = u, c
        for v in bits(p & ~adj[best]):
            bit = 1 << v
            expand(r | bit, p & adj[v], x & adj[v])
            p &= ~bit
            x |= bit

    if candidates:
        expand(0, candidates, 0)
    return out


def induced_cycles(adj, n, max_len):
    """Chordless cycles of length ``3..max_len``.

    Each cycle is a tuple starting at its least vertex, oriented so the
    second vertex is smaller than the last.  Returns ``(cycles, exceeded)``;
    when some chordless cycle is longer than ``max_len`` the search stops
    and the result is ``([], True)``.
    """
    cycles = []

    for s in range(n):
        allowed = ~((1 << (s + 1)) - 1)
        ns = adj[s]
        # stack entries: (path, blocked) where blocked covers the path and the
        # neighbourhoods of all path vertices except s and the last one
        for v1 in bits(ns & allowed):
            stack = [((s, v1), (1 << s) | (1 << v1))]
            while stack:
                path, blocked = stack.pop()
                last = path[-1]
                cand = adj[last] & allowed & ~blocked
                for w in bits(cand):
                    if ns >> w & 1:
                        if len(path) >= 2 and w > path[1]:
                            length = len(path) + 1
                            if length <= max_len:
                                cycles.append(path + (w,))
                            else:
                                return [], True
                        continue
                    stack.append((path + (w,), blocked | adj[last] | (1 << w)))
    return cycles, False
