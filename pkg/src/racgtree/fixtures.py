"""Bundled example graphs, addressable by name from the API and the CLI."""

from racgtree.graph import Graph, parse_graph


def _pairs(text):
    return "\n".join(f"{p[0]} {p[1]}" for p in text.split()) + "\n"


def _cycle(n):
    return "\n".join(f"{i} {(i + 1) % n}" for i in range(n)) + "\n"


def _biclique(left, right):
    return "\n".join(f"{a} {b}" for a in left for b in right) + "\n"


FIXTURE_TEXT = {
    # three square-suspensions hung off the central suspension {3,4}*{0,1,2,8}
    "FIG4": _pairs("03 04 05 13 14 16 23 24 27 38 48 58 68 78"),
    # same cylinder shape, but the outer poles form a triangle on {0,1,2}
    "FIG2": _pairs("03 04 05 07 13 14 15 16 23 24 26 27 38 48"),
    "C4": _cycle(4),
    "C6": _cycle(6),
    "C8": _cycle(8),
    "K33": _biclique("012", "345"),
    "K23": _biclique("01", "234"),
    "TWOSUS": _pairs("ac ad ae bc bd be cf df"),
    "P4": "0 1\n1 2\n2 3\n",
    "PETERSEN": _cycle(5)
    + "".join(f"{i} {i + 5}\n" for i in range(5))
    + "".join(f"{5 + i} {5 + (i + 2) % 5}\n" for i in range(5)),
}

FIXTURES = tuple(sorted(FIXTURE_TEXT))


def fixture(name: str) -> Graph:
    """Return the bundled graph ``name`` (case-insensitive)."""
    key = name.upper()
    if key not in FIXTURE_TEXT:
        raise KeyError(f"unknown fixture {name!r}; known: {', '.join(FIXTURES)}")
    return parse_graph(FIXTURE_TEXT[key])
