"""Command-line interface: ``racgtree COMMAND (--input PATH | --fixture NAME)``.

Exit codes: 0 ok or YES, 1 NO (or a failed verification), 2 the graph fails
the standing hypotheses, 3 bad input, 4 an internal consistency check failed.
"""

from __future__ import annotations

import argparse
import json
import sys

from racgtree import construction as cons
from racgtree.classify import GATE_FAIL, NO, YES, classify
from racgtree.cuts import (
    all_cuts,
    crossing_classes,
    inseparability_graph,
    maximal_suspensions,
    maximal_thick_joins,
)
from racgtree.cylinders import annotate, export_goc, graph_of_cylinders
from racgtree.errors import (
    BoundExceeded,
    GraphError,
    InternalInconsistency,
    ResourceBoundExceeded,
    UnknownGenerator,
)
from racgtree.fixtures import FIXTURES, fixture
from racgtree.graph import Graph, export_dot, graph_to_dict, parse_graph, precondition_gate
from racgtree.squares import diagonal_graph, induced_squares, is_cfs
from racgtree.words import format_artin_word, injectivity_sample, non_commuting_images

EXIT_OK, EXIT_NO, EXIT_GATE, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2, 3, 4
COMMANDS = ("check", "squares", "cuts", "jsj", "classify", "construct", "verify")


class InputError(Exception):
    pass


def _braces(names) -> str:
    return "{" + ",".join(names) + "}"


def _schema(command: str) -> str:
    return f"racgtree.{command}/1"


def _dump(doc: dict) -> str:
    return json.dumps(doc, indent=2) + "\n"


def _read_text(args) -> str:
    if args.fixture:
        return None
    if args.input == "-":
        data = sys.stdin.buffer.read()
    else:
        try:
            with open(args.input, "rb") as fh:
                data = fh.read()
        except OSError as exc:
            raise InputError(f"cannot read {args.input}: {exc.strerror}") from None
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError:
        raise InputError("input is not UTF-8") from None


def _graph_from_text(text: str) -> Graph:
    fmt = "structured" if text.lstrip().startswith("{") else "edge-list"
    return parse_graph(text, fmt)


def _load_graph(args) -> Graph:
    if args.fixture:
        try:
            return fixture(args.fixture)
        except KeyError as exc:
            raise InputError(exc.args[0]) from None
    return _graph_from_text(_read_text(args))


# -- commands ---------------------------------------------------------------------

def cmd_check(args):
    g = _load_graph(args)
    report = precondition_gate(g)
    code = EXIT_OK if report.passed else EXIT_GATE
    if args.format == "structured":
        return code, _dump({
            "schema": _schema("check"),
            "passed": report.passed,
            "triangle_free": report.triangle_free,
            "incomplete": report.incomplete,
            "connected": report.connected,
            "separating_cliques": [list(c) for c in report.separating_cliques],
            "is_cycle_graph": report.is_cycle_graph,
            "reasons": report.reasons,
        })
    if args.format == "dot":
        marked = {v for c in report.separating_cliques for v in c}
        return code, export_dot(g, {v: {"color": "red"} for v in marked})
    lines = [
        f"vertices: {g.n}  edges: {len(g.edges)}",
        f"triangle-free: {report.triangle_free}",
        f"incomplete: {report.incomplete}",
        f"connected: {report.connected}",
        f"cycle graph: {report.is_cycle_graph}",
    ]
    lines += [f"separating clique: {_braces(c)}" for c in report.separating_cliques]
    lines.append("gate: " + ("pass" if report.passed else "FAIL (" + "; ".join(report.reasons) + ")"))
    return code, "\n".join(lines) + "\n"


def cmd_squares(args):
    g = _load_graph(args)
    dg = diagonal_graph(g)
    cfs = is_cfs(g)
    if args.format == "structured":
        doc = {"schema": _schema("squares"), "squares": [[list(p), list(q)] for p, q in induced_squares(g)]}
        doc["diagonal_graph"] = dg.as_dict()
        doc["cfs"] = cfs.cfs
        doc["cfs_witness"] = [list(v) for v in cfs.witness_component] if cfs.witness_component else None
        return EXIT_OK, _dump(doc)
    if args.format == "dot":
        diag = Graph.from_edges(
            [(",".join(p), ",".join(q)) for p, q in dg.edges], [",".join(v) for v in dg.vertices]
        )
        return EXIT_OK, export_dot(diag, name="diagonal")
    lines = [f"square {_braces(p)}*{_braces(q)}" for p, q in induced_squares(g)]
    lines.append(f"diagonal graph: {len(dg.vertices)} vertices, {len(dg.edges)} edges, tree: {dg.is_tree()}")
    lines.append(f"cfs: {cfs.cfs}")
    return EXIT_OK, "\n".join(lines) + "\n"


def cmd_cuts(args):
    g = _load_graph(args)
    cuts = all_cuts(g)
    classes = crossing_classes(g, cuts)
    insep = inseparability_graph(g, cuts)
    joins = maximal_thick_joins(g)
    if args.format == "structured":
        return EXIT_OK, _dump({
            "schema": _schema("cuts"),
            "cuts": [c.as_dict() for c in cuts],
            "crossing": classes.as_dict(),
            "inseparability_graph": graph_to_dict(insep),
            "maximal_thick_joins": [[list(a), list(b)] for a, b in joins],
            "maximal_suspensions": [s.as_dict() for s in maximal_suspensions(g)],
        })
    if args.format == "dot":
        return EXIT_OK, export_dot(insep, name="inseparability")
    lines = [f"cut {c.label()}  components: " + " | ".join(_braces(x) for x in c.components) for c in cuts]
    lines += [f"uncrossed {c.label()}" for c in classes.uncrossed]
    lines += ["hanging " + " ".join(c.label() for c in h) for h in classes.hanging_collections]
    lines += [f"join {_braces(a)}*{_braces(b)}" for a, b in joins]
    lines.append("inseparability non-edges: " + " ".join(
        _braces((u, v)) for i, u in enumerate(insep.names) for v in insep.names[i + 1:]
        if not insep.has_edge(u, v)
    ))
    return EXIT_OK, "\n".join(lines) + "\n"


def cmd_jsj(args):
    g = _load_graph(args)
    report = precondition_gate(g)
    if not report.passed:
        return EXIT_GATE, _gate_output(args, "jsj", report)
    if report.is_cycle_graph:
        if args.format == "structured":
            return EXIT_GATE, _dump({"schema": _schema("jsj"), "verdict": GATE_FAIL, "reasons": ["cycle graph"]})
        return EXIT_GATE, "GATE_FAIL: cycle graph\n"
    goc = annotate(graph_of_cylinders(g))
    fmt = {"structured": "structured", "dot": "dot"}.get(args.format, "text")
    out = export_goc(goc, fmt)
    if fmt == "structured":
        doc = json.loads(out)
        doc["schema"] = _schema("jsj")
        out = _dump(doc)
    return EXIT_OK, out


def _gate_output(args, command, report):
    if args.format == "structured":
        return _dump({"schema": _schema(command), "verdict": GATE_FAIL, "reasons": report.reasons})
    return "GATE_FAIL: " + "; ".join(report.reasons) + "\n"


def _classification_text(result) -> list:
    lines = [f"verdict: {result.verdict}"]
    if result.verdict == GATE_FAIL:
        lines += [f"reason: {r}" for r in result.reasons]
    elif result.obstruction is not None:
        lines.append(f"obstruction: {type(result.obstruction).__name__}")
        lines.append(f"detail: {result.obstruction.describe()}")
    return lines


def _exit_for(verdict) -> int:
    return {YES: EXIT_OK, NO: EXIT_NO, GATE_FAIL: EXIT_GATE}[verdict]


def cmd_classify(args):
    g = _load_graph(args)
    result = classify(g, max_cycle_len=args.max_cycle_len)
    code = _exit_for(result.verdict)
    if args.format == "structured":
        doc = result.as_dict()
        doc["schema"] = _schema("classify")
        return code, _dump(doc)
    if args.format == "dot":
        if result.construction is not None:
            return code, export_dot(result.construction.commuting, name="commuting")
        return code, export_dot(g)
    lines = _classification_text(result)
    if result.construction is not None:
        delta = result.construction.commuting
        lines.append(f"commuting graph: {delta.n} vertices, {len(delta.edges)} edges")
    return code, "\n".join(lines) + "\n"


def cmd_construct(args):
    g = _load_graph(args)
    result = classify(g, max_cycle_len=args.max_cycle_len)
    code = _exit_for(result.verdict)
    fidl = result.construction
    if fidl is None:
        if args.format == "structured":
            doc = result.as_dict()
            doc["schema"] = _schema("construct")
            return code, _dump(doc)
        return code, "\n".join(_classification_text(result)) + "\n"
    if args.format == "structured":
        return code, fidl.to_json()
    if args.format == "dot":
        return code, export_dot(fidl.commuting, name="commuting")
    lines = ["suspension tree: " + " ".join(_braces(v) for v in fidl.suspension_tree.vertices)]
    for pole, tree in sorted(fidl.pole_trees.items()):
        lines.append(
            f"pole {_braces(pole)}: mandatory "
            + (" ".join(_braces(e) for e in tree.mandatory) or "-")
            + "; discretionary "
            + (" ".join(_braces(e) for e in tree.discretionary) or "-")
        )
    for k in (0, 1):
        tree = fidl.tree(k)
        lines.append(f"tree{k}: " + " ".join(f"{a}-{b}" for a, b in tree.edges))
    lines.append("commuting graph: " + " ".join(f"[{u}]-[{v}]" for u, v in fidl.commuting.edge_names()))
    lines += fidl.generator_lines()
    return code, "\n".join(lines) + "\n"


def cmd_verify(args):
    text = None if args.fixture else _read_text(args)
    doc = None
    if text is not None and text.lstrip().startswith("{"):
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(f"invalid JSON: {exc.msg}") from None
    if doc is not None and doc.get("schema") == cons.SCHEMA:
        g, fidl, stored = cons.fidl_from_dict(doc)
    else:
        g = _load_graph(args) if args.fixture else _graph_from_text(text)
        result = classify(g, certify=False)
        if result.construction is None:
            code = _exit_for(result.verdict)
            return code, "\n".join(_classification_text(result)) + "\n"
        fidl = result.construction
        stored = fidl.commuting

    checks = {}

    def record(name, problem):
        checks[name] = "ok" if problem is None else problem

    try:
        cons.check_trees(g, fidl.tree0, fidl.tree1, fidl.vertex_colors)
        record("trees", None)
    except InternalInconsistency as exc:
        record("trees", str(exc))
    same = fidl.commuting.names == stored.names and fidl.commuting.edges == stored.edges
    record("commuting graph matches", None if same else "recomputed commuting graph differs")
    try:
        cons.check_commuting(fidl.commuting)
        record("commuting graph", None)
    except InternalInconsistency as exc:
        record("commuting graph", str(exc))
    expected = {cons.pair_name(e): e for e in fidl.tree0.edges + fidl.tree1.edges}
    record("generator map", None if fidl.generator_map == expected else "generator map does not match tree edges")
    bad = cons.verify_hull_join_condition(g, fidl)
    record("hull join", None if bad is None else
           f"square {_braces(bad.square[0])}*{_braces(bad.square[1])} misses edge {bad.missing_edge[0]}-{bad.missing_edge[1]}")
    bad = cons.verify_cycle_square_condition(g, fidl, args.max_cycle_len)
    record("cycle squares", None if bad is None else
           f"cycle {'-'.join(bad.cycle)} edge {bad.edge[0]}-{bad.edge[1]}")
    try:
        bad = non_commuting_images(fidl)
        record("homomorphism", None if not bad else f"images of {bad[0][0]} and {bad[0][1]} do not commute")
        collision = injectivity_sample(g, fidl, max_len=10**9, limit=args.max_words)
        record("injectivity sample", None if collision is None else
               f"{format_artin_word(collision.word)!r} and {format_artin_word(collision.earlier)!r} collide")
    except UnknownGenerator as exc:
        record("homomorphism", f"no image for generator {exc.args[0]}")

    ok = all(v == "ok" for v in checks.values())
    code = EXIT_OK if ok else EXIT_NO
    if args.format == "structured":
        return code, _dump({"schema": _schema("verify"), "ok": ok, "checks": checks})
    if args.format == "dot":
        return code, export_dot(fidl.commuting, name="commuting")
    lines = [f"{name}: {value}" for name, value in checks.items()]
    lines.append("verified" if ok else "FAILED")
    return code, "\n".join(lines) + "\n"


HANDLERS = {
    "check": cmd_check,
    "squares": cmd_squares,
    "cuts": cmd_cuts,
    "jsj": cmd_jsj,
    "classify": cmd_classify,
    "construct": cmd_construct,
    "verify": cmd_verify,
}


def _positive(text):
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="racgtree",
        description="Decide quasiisometry to a tree RAAG for triangle-free Coxeter groups.",
    )
    parser.add_argument("command", choices=COMMANDS)
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument("--input", metavar="PATH", help="graph file, or - for standard input")
    source.add_argument("--fixture", metavar="NAME", help="bundled graph: " + ", ".join(FIXTURES))
    parser.add_argument("--format", choices=("text", "structured", "dot"), default="text")
    parser.add_argument("--max-cycle-len", type=_positive, default=None,
                        help="longest induced cycle to check (default: vertex count)")
    parser.add_argument("--max-words", type=_positive, default=5000,
                        help="number of Artin normal forms sampled by verify")
    return parser


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        code, out = HANDLERS[args.command](args)
    except InternalInconsistency as exc:
        print(f"internal inconsistency: {exc}", file=stderr)
        return EXIT_INTERNAL
    except (InputError, GraphError, BoundExceeded, ResourceBoundExceeded) as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_INPUT
    stdout.write(out)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
