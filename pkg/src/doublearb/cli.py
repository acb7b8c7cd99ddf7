"""Command-line front end.

Exit codes: 0 success, 1 negative result (verification failed, mismatches
found, no word within the cap), 2 input error, 3 the graph is outside the
class a subcommand needs.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import lab
from .graph import (
    P4,
    Graph,
    GraphError,
    find_induced_copy,
    load_graph,
)
from .orientation import (
    arborescence_orientation,
    double_arborescence_orientation,
    longest_chain,
)
from .splitdec import AlternatedPath, build_clique_star_tree, classify_via_tree
from .wordrep import (
    SearchSpaceError,
    algorithm1_minword,
    brute_force_min_length,
    double_arb_minword,
    represents,
    restrict,
)

EXIT_OK, EXIT_NEGATIVE, EXIT_INPUT, EXIT_CLASS = 0, 1, 2, 3


class InputError(Exception):
    pass


def _read_graph(path: str) -> Graph:
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return load_graph(text)
    except GraphError as exc:
        raise InputError(f"{path}: {exc}") from None


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, default=_jsonable)


def _jsonable(obj):
    if isinstance(obj, AlternatedPath):
        return {"nodes": list(obj.nodes), "kinds": list(obj.kinds)}
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _path_text(report, path: AlternatedPath) -> str:
    return " ".join(report.tree.label(x) for x in path.nodes)


def _describe(g: Graph, report) -> str:
    w = report.witnesses
    if not report.is_dh:
        return "not distance-hereditary"
    if not report.is_treelike:
        detail = w["treelike"]
        return f"distance-hereditary; not treelike comparability (witness {_dump(detail)})"
    if report.is_arb:
        o = arborescence_orientation(g)
        return f"arborescence (root {g.label(o.root)})"
    if report.is_double_arb:
        o = double_arborescence_orientation(g)
        cc = w.get("center_center_path")
        tail = f" (center-center-path witness {_path_text(report, cc)})" if cc else ""
        return f"strict double-arborescence (root {g.label(o.root)}); not arborescence{tail}"
    path = w["s_leaf_path"]
    return ("treelike comparability; not double-arborescence "
            f"(s-leaf-path witness {_path_text(report, path)})")


def cmd_recognize(args) -> int:
    g = _read_graph(args.path)
    report = classify_via_tree(g)
    if args.format == "json":
        out = {
            "classification": report.classification,
            "flags": report.flags(),
            "witnesses": report.witnesses,
        }
        if report.is_double_arb:
            o = arborescence_orientation(g) or double_arborescence_orientation(g)
            out["root"] = o.root
            out["orientation"] = o.to_json()
        if args.crosscheck:
            cross = lab.crosscheck(g)
            out["crosscheck"] = {"flags": cross.flags(), "mismatches": cross.mismatches}
        print(_dump(out))
    else:
        print(_describe(g, report))
        if args.crosscheck:
            cross = lab.crosscheck(g)
            status = "consistent" if not cross.mismatches else "; ".join(cross.mismatches)
            print(f"crosscheck: {status}")
    return EXIT_OK


def cmd_tree(args) -> int:
    g = _read_graph(args.path)
    t = build_clique_star_tree(g)
    if t is None:
        print("not distance-hereditary: no clique-star tree", file=sys.stderr)
        return EXIT_CLASS
    if args.format == "json":
        print(_dump(t.to_json()))
    elif args.format == "dot":
        sys.stdout.write(t.to_dot())
    else:
        print(f"{len(t.components)} components")
        for ci, comp in enumerate(t.components):
            members = " ".join(t.label(x) for x in comp.vertices)
            center = f" center {t.label(comp.center)}" if comp.center is not None else ""
            print(f"  {ci}: {comp.kind} [{members}]{center}")
        for a, b in t.tree_edges:
            print(f"  T {t.label(a)} -- {t.label(b)}")
    return EXIT_OK


def cmd_minword(args) -> int:
    g = _read_graph(args.path)
    report = classify_via_tree(g)
    if not report.is_double_arb:
        copy = find_induced_copy(g, P4)
        if copy is not None:
            cited = " ".join(g.label(copy[i]) for i in range(4))
            reason = f"induced P4 on {cited}"
        else:
            reason = report.classification
        print(f"not a double-arborescence: {reason}", file=sys.stderr)
        return EXIT_CLASS
    p = arborescence_orientation(g)
    if p is not None:
        chain = longest_chain(p)
        word = algorithm1_minword(p, chain)
    else:
        o = double_arborescence_orientation(g)
        chain = longest_chain(o)
        word = double_arb_minword(o)
    check = represents(word, g)
    if not check:
        raise RuntimeError(f"constructed word failed verification at {check.pair}")
    k = len(chain)
    labels = [g.label(x) for x in word]
    if args.format == "json":
        print(_dump({
            "word": labels, "n": g.n, "k": k, "length": len(word),
            "expected_length": 2 * g.n - k, "chain": [g.label(x) for x in chain],
        }))
    else:
        print(" ".join(labels))
        print(f"n={g.n} k={k} length={len(word)} (2n-k={2 * g.n - k})")
        print("chain: " + " ".join(g.label(x) for x in chain))
    return EXIT_OK


def cmd_verify(args) -> int:
    g = _read_graph(args.path)
    try:
        word = [g.index_of(tok) for tok in args.word.split()]
        check = represents(word, g)
    except GraphError as exc:
        raise InputError(str(exc)) from None
    failures = []
    if not check:
        a, b = check.pair
        sub = " ".join(g.label(x) for x in restrict(word, (a, b)))
        failures.append({"a": g.label(a), "b": g.label(b), "reason": check.reason, "restricted": sub})
    if args.format == "json":
        print(_dump({"ok": check.ok, "length": len(word), "failures": failures}))
    elif check:
        print(f"ok: word of length {len(word)} represents the graph")
    else:
        f = failures[0]
        print(f"fail: ({f['a']}, {f['b']}) {f['reason']}; restricted word: {f['restricted']}")
    return EXIT_OK if check else EXIT_NEGATIVE


def cmd_generate(args) -> int:
    cfg = lab.GenConfig(n=args.n, seed=args.seed, branching=args.branching, strict=args.strict)
    if args.kind == "arborescence":
        g, _ = lab.gen_arborescence(cfg)
    elif args.kind == "double-arborescence":
        g, _ = lab.gen_double_arborescence(cfg)
    elif args.kind == "path":
        g = lab.gen_path_of_double_arborescences(args.k, cfg)
    else:
        g = lab.gen_dh_graph(cfg)
    print(f"# {args.kind} n={args.n} seed={args.seed}")
    sys.stdout.write(g.to_edge_list())
    return EXIT_OK


def _mismatch_line(g: Graph, rep) -> str:
    return _dump({"graph": g.to_edge_list(), "flags": rep.flags(), "mismatches": rep.mismatches})


def cmd_crosscheck(args) -> int:
    if args.sweep is not None:
        graphs = lab.enumerate_connected_graphs(args.sweep)
    elif args.path is not None:
        graphs = [_read_graph(args.path)]
    else:
        raise InputError("crosscheck needs a PATH or --sweep N")
    total = bad = 0
    for g in graphs:
        rep = lab.crosscheck(g)
        total += 1
        if rep.mismatches:
            bad += 1
            print(_mismatch_line(g, rep))
        elif args.path is not None and args.sweep is None:
            print(_dump({"graph": g.to_edge_list(), "flags": rep.flags(), "mismatches": []}))
    print(f"checked {total} graphs, {bad} with mismatches", file=sys.stderr)
    return EXIT_OK if bad == 0 else EXIT_NEGATIVE


def cmd_oracle(args) -> int:
    g = _read_graph(args.path)
    cap = args.cap if args.cap is not None else 2 * g.n
    try:
        found = brute_force_min_length(g, cap, allow_large=args.allow_large)
    except (SearchSpaceError, ValueError) as exc:
        raise InputError(str(exc)) from None
    if found is None:
        print(f"no representing word of length <= {cap}")
        return EXIT_NEGATIVE
    length, word = found
    labels = [g.label(x) for x in word]
    if args.format == "json":
        print(_dump({"length": length, "word": labels}))
    else:
        print(f"minimum length {length}: {' '.join(labels)}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="doublearb",
        description="Recognize (double-)arborescences and build minimum word-representants.",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="Graphs are edge lists: the vertex count on the first line, then 'u v' per edge. "
               "Use '-' to read standard input.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, example, formats=("text", "json")):
        p = sub.add_parser(name, help=help_text, description=help_text,
                           epilog=f"example: {example}",
                           formatter_class=argparse.RawDescriptionHelpFormatter)
        p.set_defaults(func=func)
        if formats:
            p.add_argument("--format", choices=formats, default="text")
        return p

    p = add("recognize", cmd_recognize, "classify a graph via its split-decomposition tree",
            "doublearb recognize star.txt  ->  arborescence (root 0)")
    p.add_argument("path")
    p.add_argument("--crosscheck", action="store_true",
                   help="also run the definition-side checks and report disagreements")

    p = add("tree", cmd_tree, "print the minimal clique-star tree",
            "doublearb tree twins.txt --format dot > tree.dot", ("text", "json", "dot"))
    p.add_argument("path")

    p = add("minword", cmd_minword, "build a minimum word-representant of a double-arborescence",
            "doublearb minword w4.txt  ->  2 1 3 4 2 0 3")
    p.add_argument("path")

    p = add("verify", cmd_verify, "check whether a word represents a graph",
            "doublearb verify k2.txt '0 1 0 1'")
    p.add_argument("path")
    p.add_argument("word", help="space-separated vertex labels")

    p = add("generate", cmd_generate, "emit a random instance as an edge list",
            "doublearb generate double-arborescence --n 12 --seed 7 --strict", None)
    p.add_argument("kind", choices=["arborescence", "double-arborescence", "path", "dh"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--strict", action="store_true")
    p.add_argument("--k", type=int, default=2, help="number of pieces for 'path'")
    p.add_argument("--branching", type=int, default=None)

    p = add("crosscheck", cmd_crosscheck,
            "compare definition-side and tree-side verdicts; one JSON line per mismatch",
            "doublearb crosscheck --sweep 5", None)
    p.add_argument("path", nargs="?")
    p.add_argument("--sweep", type=int, default=None, metavar="N",
                   help="check every connected labeled graph on N vertices")

    p = add("oracle", cmd_oracle, "exhaustive search for the shortest representing word",
            "doublearb oracle p4.txt  ->  minimum length 6: ...")
    p.add_argument("path")
    p.add_argument("--cap", type=int, default=None, help="maximum word length (default 2n)")
    p.add_argument("--allow-large", action="store_true")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except GraphError as exc:
        # disconnected input, generator infeasibility, enumeration guards
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
