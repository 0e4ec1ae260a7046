"""Kernel dispatch: compiled core when available, pure Python otherwise.

The backend is chosen once at import.  Set ``RACGTREE_KERNELS=python`` to
force the fallback.  Graphs with more than 64 vertices always use the
Python kernels since the compiled ones work on ``uint64`` masks.
"""

import os

from racgtree import _pykernels

BACKEND = "python"
_ck = None
if os.environ.get("RACGTREE_KERNELS", "").lower() != "python":
    try:
        from racgtree import _ckernels as _ck
    except ImportError:  # extension not built
        _ck = None
    else:
        BACKEND = "cython"

_WORD = 64

bits = _pykernels.bits


def popcount(mask):
    return bin(mask).count("1")


def components(adj, alive):
    if _ck is not None and len(adj) <= _WORD:
        return _ck.components(adj, alive)
    return _pykernels.components(adj, alive)


def induced_squares(adj, n):
    if _ck is not None and n <= _WORD:
        return _ck.induced_squares(adj, n)
    return _pykernels.induced_squares(adj, n)


def maximal_cliques(adj, candidates):
    if _ck is not None and len(adj) <= _WORD:
        return _ck.maximal_cliques(adj, candidates)
    return _pykernels.maximal_cliques(adj, candidates)


def induced_cycles(adj, n, max_len):
    if _ck is not None and n <= _WORD:
        return _ck.induced_cycles(adj, n, max_len)
    return _pykernels.induced_cycles(adj, n, max_len)
