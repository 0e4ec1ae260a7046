"""Small helpers for graphs given as node and edge collections of hashables.

Used for the diagonal graph, the per-pole trees and the commuting graph,
where vertices are pairs rather than indices of a ``Graph``.
"""

from collections import deque


def adjacency(nodes, edges):
    adj = {v: set() for v in nodes}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    return adj


class UnionFind:
    def __init__(self, items=()):
        self.parent = {x: x for x in items}

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[rb] = ra
        return True


def components(nodes, edges):
    """Components as sorted tuples, listed in order of their least node."""
    uf = UnionFind(nodes)
    for u, v in edges:
        uf.union(u, v)
    groups = {}
    for v in nodes:
        groups.setdefault(uf.find(v), []).append(v)
    return sorted(tuple(sorted(g)) for g in groups.values())


def find_cycle_edge(nodes, edges):
    """First edge (in the given order) that closes a cycle, or None."""
    uf = UnionFind(nodes)
    for u, v in edges:
        if not uf.union(u, v):
            return (u, v)
    return None


def is_forest(nodes, edges):
    return find_cycle_edge(nodes, edges) is None


def is_tree(nodes, edges):
    nodes = list(nodes)
    edges = list(edges)
    return bool(nodes) and len(edges) == len(nodes) - 1 and is_forest(nodes, edges)


def distances(adj, source):
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def diameter(adj):
    """Diameter of a connected graph by all-sources BFS."""
    return max((max(distances(adj, v).values()) for v in adj), default=0)


def path(adj, u, v):
    """Some shortest path from ``u`` to ``v``; in a tree, the unique one."""
    prev = {u: None}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        if x == v:
            break
        for w in sorted(adj[x]):
            if w not in prev:
                prev[w] = x
                queue.append(w)
    if v not in prev:
        return None
    out = [v]
    while out[-1] != u:
        out.append(prev[out[-1]])
    return out[::-1]


def find_cycle(adj):
    """A cycle as a vertex list, or None for a forest."""
    seen = set()
    for root in sorted(adj):
        if root in seen:
            continue
        parent = {root: None}
        stack = [root]
        seen.add(root)
        while stack:
            u = stack.pop()
            for w in sorted(adj[u]):
                if w == parent[u]:
                    continue
                if w in parent:
                    # unwind both branches to the common ancestor
                    up = [u]
                    while up[-1] is not None:
                        up.append(parent[up[-1]])
                    down = [w]
                    while down[-1] not in up:
                        down.append(parent[down[-1]])
                    meet = down[-1]
                    return up[: up.index(meet) + 1] + down[-2::-1]
                parent[w] = u
                seen.add(w)
                stack.append(w)
    return None
