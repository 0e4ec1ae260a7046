"""Compare the compiled kernels against the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--sizes 16 32 48 64] [--repeat 5]

Each kernel runs on the same random triangle-free graphs under both
backends; results are checked for equality before timings are reported.
"""

import argparse
import itertools
import random
import sys
import timeit

from racgtree import _pykernels

try:
    from racgtree import _ckernels
except ImportError:
    _ckernels = None


def random_triangle_free(n, m, rng):
    adj = [0] * n
    pairs = list(itertools.combinations(range(n), 2))
    rng.shuffle(pairs)
    edges = 0
    for i, j in pairs:
        if edges >= m:
            break
        if adj[i] & adj[j]:
            continue
        adj[i] |= 1 << j
        adj[j] |= 1 << i
        edges += 1
    return adj


def cases(adj, n):
    full = (1 << n) - 1
    comp = [(full & ~adj[v]) & ~(1 << v) for v in range(n)]
    # full enumeration is exponential, so cycles use the first 20 vertices
    m = min(n, 20)
    sub = [a & ((1 << m) - 1) for a in adj[:m]]
    return {
        "components (all pair removals)": lambda k: [
            k.components(adj, full & ~((1 << i) | (1 << j))) for i in range(n) for j in range(i + 1, n)
        ],
        "induced_squares": lambda k: k.induced_squares(adj, n),
        "maximal_cliques (complement)": lambda k: k.maximal_cliques(comp, full),
        f"induced_cycles (first {m} vertices)": lambda k: k.induced_cycles(sub, m, m)[0],
    }


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", type=int, nargs="+", default=[16, 32, 48, 64])
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--seed", type=int, default=7)
    args = parser.parse_args(argv)
    if _ckernels is None:
        print("compiled kernels not built; only the Python backend is available")
        return 1
    rng = random.Random(args.seed)
    print(f"{'kernel':34} {'n':>3} {'python ms':>10} {'cython ms':>10} {'speedup':>8}")
    for n in args.sizes:
        adj = random_triangle_free(n, 2 * n, rng)
        for name, fn in cases(adj, n).items():
            py, cy = fn(_pykernels), fn(_ckernels)
            if sorted(map(repr, py)) != sorted(map(repr, cy)):
                print(f"MISMATCH in {name} at n={n}", file=sys.stderr)
                return 2
            t_py = min(timeit.repeat(lambda: fn(_pykernels), number=1, repeat=args.repeat))
            t_cy = min(timeit.repeat(lambda: fn(_ckernels), number=1, repeat=args.repeat))
            print(f"{name:34} {n:>3} {t_py * 1e3:>10.2f} {t_cy * 1e3:>10.2f} {t_py / max(t_cy, 1e-9):>7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
