# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled bitmask kernels for graphs with at most 64 vertices.

Same contracts as ``racgtree._pykernels``; masks are ``uint64``.
"""

from libc.stdint cimport uint64_t

cdef extern from *:
    int __builtin_ctzll(unsigned long long x) nogil
    int __builtin_popcountll(unsigned long long x) nogil

cdef enum:
    MAXN = 64


cdef inline int _load(object adj, uint64_t* out) except -1:
    cdef int n = len(adj)
    cdef int i
    if n > MAXN:
        raise ValueError("compiled kernels handle at most 64 vertices")
    for i in range(n):
        out[i] = <uint64_t>adj[i]
    return n


cdef inline uint64_t _above(int a) nogil:
    if a >= 63:
        return 0
    return ~((<uint64_t>2 << a) - 1)


def components(adj, alive):
    cdef uint64_t a[MAXN]
    _load(adj, a)
    cdef uint64_t rest = <uint64_t>alive
    cdef uint64_t comp, frontier, reach, f, low
    cdef int v
    comps = []
    while rest:
        low = rest & (~rest + 1)
        comp = low
        frontier = low
        while frontier:
            reach = 0
            f = frontier
            while f:
                v = __builtin_ctzll(f)
                reach |= a[v]
                f &= f - 1
            frontier = reach & rest & ~comp
            comp |= frontier
        comps.append(comp)
        rest &= ~comp
    return comps


def induced_squares(adj, int n):
    cdef uint64_t a[MAXN]
    _load(adj, a)
    cdef int x, b, d, c
    cdef uint64_t above, nb, nb2, opp
    out = []
    for x in range(n):
        above = _above(x)
        nb = a[x] & above
        while nb:
            b = __builtin_ctzll(nb)
            nb &= nb - 1
            nb2 = nb
            while nb2:
                d = __builtin_ctzll(nb2)
                nb2 &= nb2 - 1
                if (a[b] >> d) & 1:
                    continue
                opp = a[b] & a[d] & above & ~a[x]
                while opp:
                    c = __builtin_ctzll(opp)
                    opp &= opp - 1
                    out.append((x, c, b, d))
    return out


cdef void _bk(uint64_t* a, uint64_t r, uint64_t p, uint64_t x, list out):
    cdef uint64_t pool, it, bit
    cdef int u, v, best, cnt, best_cnt
    if p == 0 and x == 0:
        out.append(r)
        return
    pool = p | x
    best = -1
    best_cnt = -1
    while pool:
        u = __builtin_ctzll(pool)
        pool &= pool - 1
        cnt = __builtin_popcountll(p & a[u])
        if cnt > best_cnt:
            best = u
            best_cnt = cnt
    it = p & ~a[best]
    while it:
        v = __builtin_ctzll(it)
        it &= it - 1
        bit = (<uint64_t>1) << v
        _bk(a, r | bit, p & a[v], x & a[v], out)
        p &= ~bit
        x |= bit


def maximal_cliques(adj, candidates):
    cdef uint64_t a[MAXN]
    _load(adj, a)
    out = []
    cdef uint64_t cand = <uint64_t>candidates
    if cand:
        _bk(a, 0, cand, 0, out)
    return out


def induced_cycles(adj, int n, int max_len):
    cdef uint64_t a[MAXN]
    _load(adj, a)
    cdef int s, v1, w, depth, last
    cdef uint64_t allowed, ns, cand
    # explicit DFS with per-depth candidate masks
    cdef int path[MAXN + 1]
    cdef uint64_t blocked[MAXN + 1]
    cdef uint64_t pending[MAXN + 1]
    cycles = []
    for s in range(n):
        allowed = _above(s)
        ns = a[s]
        path[0] = s
        cand = ns & allowed
        while cand:
            v1 = __builtin_ctzll(cand)
            cand &= cand - 1
            path[1] = v1
            depth = 1
            blocked[1] = ((<uint64_t>1) << s) | ((<uint64_t>1) << v1)
            pending[1] = a[v1] & allowed & ~blocked[1]
            while depth >= 1:
                if pending[depth] == 0:
                    depth -= 1
                    continue
                w = __builtin_ctzll(pending[depth])
                pending[depth] &= pending[depth] - 1
                if (ns >> w) & 1:
                    if w > path[1]:
                        if depth + 2 <= max_len:
                            cycles.append(tuple([path[i] for i in range(depth + 1)]) + (w,))
                        else:
                            return [], True
                    continue
                last = path[depth]
                path[depth + 1] = w
                blocked[depth + 1] = blocked[depth] | a[last] | ((<uint64_t>1) << w)
                pending[depth + 1] = a[w] & allowed & ~blocked[depth + 1]
                depth += 1
    return cycles, False
