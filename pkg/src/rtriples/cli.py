"""Command-line entry point.

Exit codes: 0 success or a true answer, 1 a false answer, 2 usage or input
error, 3 a resource guard tripped.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence

from .consistency import Consistent, build, closure_consistent, is_consistent
from .dot import hypergraph_dot, tree_dot
from .errors import ResourceLimitError, RTriplesError
from .hypergraph import (Hypergraph, amplify, b_connected_set, find_acyclic_path,
                         format_hypergraph, is_cyclic_arcset, min_acyclic_path, parse_hypergraph,
                         parse_node)
from .inconsistent import MAX_SUBSET_SEARCH, closure_inconsistent, entails_inconsistent
from .reduction import reduce, write_instance
from .sat import brute_force_sat, parse_dimacs
from .triples import format_triples, leaf_set, parse_triple, parse_triples
from .verify import check_chain, check_lemma_suite, format_reports

EXIT_TRUE, EXIT_FALSE, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3


class _Usage(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise _Usage(f"cannot read {path}: {exc.strerror}") from exc


def _answer(out, value: bool) -> int:
    out.write("true\n" if value else "false\n")
    return EXIT_TRUE if value else EXIT_FALSE


def _graph(args) -> Hypergraph:
    return parse_hypergraph(_read(args.input))


def cmd_consistent(args, out) -> int:
    return _answer(out, is_consistent(parse_triples(_read(args.input))))


def cmd_build(args, out) -> int:
    triples = parse_triples(_read(args.input))
    leaves = leaf_set(triples) | frozenset(args.leaf or ())
    if not leaves:
        raise _Usage("no leaves given")
    result = build(triples, leaves)
    if not isinstance(result, Consistent):
        out.write("false\n")
        return EXIT_FALSE
    out.write(tree_dot(result.tree) if args.dot else result.tree.newick() + "\n")
    return EXIT_TRUE


def cmd_closure(args, out) -> int:
    triples = parse_triples(_read(args.input))
    if is_consistent(triples):
        closure = closure_consistent(triples)
    else:
        closure = closure_inconsistent(triples, max_size=args.budget)
    out.write(format_triples(closure))
    return EXIT_TRUE


def cmd_entails(args, out) -> int:
    triples = parse_triples(_read(args.input))
    t = parse_triple(args.triple)
    return _answer(out, entails_inconsistent(triples, t, max_size=args.budget).entailed)


def cmd_reduce(args, out) -> int:
    formula = parse_dimacs(_read(args.input))
    inst = reduce(formula)
    if args.dot:
        out.write(hypergraph_dot(inst.hypergraph))
        return EXIT_TRUE
    prefix = args.output
    if prefix is None:
        if args.input == "-":
            raise _Usage("reading from stdin needs --output PREFIX")
        prefix = str(Path(args.input).with_suffix(""))
    for p in write_instance(inst, prefix):
        out.write(f"{p}\n")
    return EXIT_TRUE


def cmd_path(args, out) -> int:
    graph = _graph(args)
    src, dst = parse_node(args.source), parse_node(args.dest)
    search = min_acyclic_path if args.min else find_acyclic_path
    path = search(graph, src, dst, max_expansions=args.max_expansions)
    if args.dot:
        out.write(hypergraph_dot(graph, highlight=path))
        return EXIT_TRUE if path is not None else EXIT_FALSE
    if path is None:
        out.write("none\n")
        return EXIT_FALSE
    out.write(f"# length {len(path)}\n")
    for a in path.arcs:
        out.write(f"{a}\n")
    return EXIT_TRUE


def cmd_bconnect(args, out) -> int:
    graph = _graph(args)
    reached = b_connected_set(graph, parse_node(args.source))
    for node in sorted(str(n) for n in reached):
        out.write(node + "\n")
    return EXIT_TRUE


def cmd_cyclic(args, out) -> int:
    return _answer(out, is_cyclic_arcset(_graph(args).arcs))


def cmd_amplify(args, out) -> int:
    graph = _graph(args)
    padded = amplify(graph, parse_node(args.source), parse_node(args.dest), args.eps,
                     arc_budget=args.arc_budget)
    out.write(hypergraph_dot(padded) if args.dot else format_hypergraph(padded))
    return EXIT_TRUE


def cmd_sat(args, out) -> int:
    v = brute_force_sat(parse_dimacs(_read(args.input)))
    if v is None:
        out.write("false\n")
        return EXIT_FALSE
    out.write("true\n")
    out.write(" ".join(str(i if x else -i) for i, x in enumerate(v, start=1)) + " 0\n")
    return EXIT_TRUE


def cmd_verify(args, out) -> int:
    formula = parse_dimacs(_read(args.input))
    reports = [check_chain(formula, entailment_budget=args.entailment_budget,
                           formula_id=args.input)]
    if args.lemmas:
        reports.append(check_lemma_suite(reduce(formula)))
    text = format_reports(reports)
    if not args.timings:
        # keep default output byte-identical across runs
        text = "".join(line + "\n" for line in text.splitlines() if not line.startswith("time_"))
    out.write(text)
    ok = reports[0].agreement and all(getattr(r, "passed", True) for r in reports)
    return EXIT_TRUE if ok else EXIT_FALSE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rtriples",
                                     description="Rooted triples, 1-2 hypergraphs and the 3SAT reduction.")
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name, func, help, dot=False):
        p = sub.add_parser(name, help=help)
        p.add_argument("input", nargs="?", default="-", help="input file (default stdin)")
        if dot:
            p.add_argument("--dot", action="store_true", help="emit graphviz dot instead")
        p.set_defaults(func=func)
        return p

    command("consistent", cmd_consistent, "is the triple set consistent")
    p = command("build", cmd_build, "BUILD tree in Newick form", dot=True)
    p.add_argument("--leaf", action="append", help="extra leaf (repeatable)")
    p = command("closure", cmd_closure, "all entailed triples")
    p.add_argument("--budget", type=int, default=MAX_SUBSET_SEARCH,
                   help="largest inconsistent set to search (default %(default)s)")
    p = command("entails", cmd_entails, "does the set entail a triple")
    p.add_argument("--triple", required=True, help='triple such as "p q | o"')
    p.add_argument("--budget", type=int, default=MAX_SUBSET_SEARCH)
    p = command("reduce", cmd_reduce, "3SAT reduction of a DIMACS formula", dot=True)
    p.add_argument("-o", "--output", help="output prefix for .triples/.hg/.meta")

    def endpoints(p, dest=True):
        p.add_argument("--from", dest="source", required=True)
        if dest:
            p.add_argument("--to", dest="dest", required=True)

    p = command("path", cmd_path, "acyclic path search", dot=True)
    endpoints(p)
    p.add_argument("--min", action="store_true", help="shortest acyclic path")
    p.add_argument("--max-expansions", type=int, default=10**7)
    p = command("bconnect", cmd_bconnect, "nodes B-connected to a source")
    endpoints(p, dest=False)
    command("cyclic", cmd_cyclic, "does the arc set contain a cycle")
    p = command("amplify", cmd_amplify, "pad with a dummy path", dot=True)
    endpoints(p)
    p.add_argument("--eps", required=True)
    p.add_argument("--arc-budget", type=int, default=10**6)
    command("sat", cmd_sat, "brute-force satisfiability")
    p = command("verify", cmd_verify, "check the sat/path/entailment chain")
    p.add_argument("--entailment-budget", type=int, default=MAX_SUBSET_SEARCH)
    p.add_argument("--lemmas", action="store_true", help="also run the per-assignment checks")
    p.add_argument("--timings", action="store_true", help="include stage timings")
    return parser


def run(argv: Sequence[str] | None = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_TRUE
    try:
        return args.func(args, out)
    except ResourceLimitError as exc:
        print(f"rtriples: resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (_Usage, RTriplesError, ValueError) as exc:
        print(f"rtriples: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())
