"""Word problem in the Coxeter group and the Artin group, and the generator map.

Coxeter words are tuples of vertex names.  Artin words are tuples of
``(generator, sign)`` with sign ``+1`` or ``-1``.  Normal forms are fully
reduced and then the lexicographically least word in their commutation
class, comparing letters by vertex order (and ``+1`` before ``-1``).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from racgtree.errors import ResourceBoundExceeded, UnknownGenerator
from racgtree.graph import Graph

DEFAULT_CAP = 10**6


def _indices(g: Graph, word: Iterable) -> list:
    out = []
    for letter in word:
        try:
            out.append(g._index[str(letter)])
        except KeyError:
            raise UnknownGenerator(str(letter)) from None
    return out


def _commute(g: Graph, i: int, j: int) -> bool:
    return bool(g.adj[i] >> j & 1)


def _least_representative(letters: list, commute, key) -> list:
    """Greedy lexicographically least word of a trace (reduced input)."""
    rest = list(letters)
    out = []
    while rest:
        best = None
        for pos, x in enumerate(rest):
            if all(commute(y, x) for y in rest[:pos]):
                if best is None or key(x) < key(rest[best]):
                    best = pos
        out.append(rest.pop(best))
    return out


def _reduce_coxeter(g: Graph, letters: list) -> list:
    out = []
    for x in letters:
        k = len(out) - 1
        while k >= 0 and out[k] != x and _commute(g, out[k], x):
            k -= 1
        if k >= 0 and out[k] == x:
            del out[k]
        else:
            out.append(x)
    return out


def racg_normal_form(g: Graph, word: Iterable) -> tuple:
    """Shortest, then lexicographically least, spelling of ``word``."""
    letters = _reduce_coxeter(g, _indices(g, word))
    nf = _least_representative(letters, lambda a, b: a != b and _commute(g, a, b), lambda x: x)
    return tuple(g.names[i] for i in nf)


def racg_equal(g: Graph, w1: Iterable, w2: Iterable) -> bool:
    return racg_normal_form(g, w1) == racg_normal_form(g, w2)


def _signed(delta: Graph, word: Iterable) -> list:
    out = []
    for gen, sign in word:
        if sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, not {sign!r}")
        out.append((_indices(delta, [gen])[0], sign))
    return out


def _reduce_artin(delta: Graph, letters: list) -> list:
    out = []
    for x, e in letters:
        k = len(out) - 1
        while k >= 0 and out[k][0] != x and _commute(delta, out[k][0], x):
            k -= 1
        if k >= 0 and out[k] == (x, -e):
            del out[k]
        else:
            out.append((x, e))
    return out


def raag_normal_form(delta: Graph, word: Iterable) -> tuple:
    """Free cancellation across commuting letters, then the least ordering."""
    letters = _reduce_artin(delta, _signed(delta, word))
    nf = _least_representative(
        letters,
        lambda a, b: a[0] != b[0] and _commute(delta, a[0], b[0]),
        lambda x: (x[0], -x[1]),
    )
    return tuple((delta.names[i], e) for i, e in nf)


def raag_equal(delta: Graph, w1: Iterable, w2: Iterable) -> bool:
    return raag_normal_form(delta, w1) == raag_normal_form(delta, w2)


# -- the homomorphism ------------------------------------------------------------

def apply_generator_map(fidl, word: Iterable) -> tuple:
    """Image of an Artin word: ``x_{a,b}`` goes to ``a b``, its inverse to ``b a``."""
    out = []
    for gen, sign in word:
        try:
            a, b = fidl.generator_map[gen]
        except KeyError:
            raise UnknownGenerator(gen) from None
        out.extend((a, b) if sign == 1 else (b, a))
    return tuple(out)


def non_commuting_images(fidl) -> list:
    """Commuting-graph edges whose generator images fail to commute."""
    g = fidl.graph
    bad = []
    for u, v in fidl.commuting.edge_names():
        uv = apply_generator_map(fidl, [(u, 1), (v, 1)])
        vu = apply_generator_map(fidl, [(v, 1), (u, 1)])
        if not racg_equal(g, uv, vu):
            bad.append((u, v))
    return bad


def color_parity_check(g: Graph, fidl, word: Iterable) -> bool:
    """Each colour class occurs an even number of times in the Coxeter word."""
    counts = [0, 0]
    for letter in word:
        if str(letter) not in g._index:
            raise UnknownGenerator(str(letter))
        counts[fidl.vertex_colors[str(letter)]] += 1
    return counts[0] % 2 == 0 and counts[1] % 2 == 0


def artin_normal_forms(delta: Graph, max_len: int, cap: int = DEFAULT_CAP):
    """Yield every normal form of length <= ``max_len``, shortest first.

    Each reduced word of length k+1 extends one of length k by a letter,
    so layers are grown from the previous one.
    """
    letters = [(name, s) for name in delta.names for s in (1, -1)]
    layer = [()]
    count = 1
    yield ()
    for k in range(max_len):
        nxt = set()
        for w in layer:
            for letter in letters:
                nf = raag_normal_form(delta, w + (letter,))
                if len(nf) == k + 1:
                    nxt.add(nf)
        count += len(nxt)
        if count > cap:
            raise ResourceBoundExceeded(f"more than {cap} normal forms up to length {k + 1}")
        layer = sorted(nxt, key=lambda w: [(delta._index[a], -e) for a, e in w])
        yield from layer


@dataclass(frozen=True)
class Collision:
    word: tuple
    earlier: tuple
    image: tuple


def injectivity_sample(
    g: Graph, fidl, max_len: int, cap: int = DEFAULT_CAP, limit: Optional[int] = None
) -> Optional[Collision]:
    """First pair of distinct Artin normal forms with equal Coxeter images.

    ``cap`` bounds the enumeration and raises when exceeded; ``limit`` just
    stops quietly after that many words.
    """
    seen = {}
    for k, w in enumerate(artin_normal_forms(fidl.commuting, max_len, cap)):
        if limit is not None and k >= limit:
            break
        image = racg_normal_form(g, apply_generator_map(fidl, w))
        if image in seen:
            return Collision(w, seen[image], image)
        seen[image] = w
    return None


# -- text form ---------------------------------------------------------------------

def format_coxeter_word(word) -> str:
    return " ".join(word)


def parse_coxeter_word(text: str) -> tuple:
    return tuple(text.split())


def format_artin_word(word) -> str:
    return " ".join(gen + ("'" if sign == -1 else "") for gen, sign in word)


def parse_artin_word(text: str) -> tuple:
    out = []
    for token in text.split():
        if token.endswith("'"):
            out.append((token[:-1], -1))
        else:
            out.append((token, 1))
    return tuple(out)
