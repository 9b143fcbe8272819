"""Graphviz dot output for hypergraphs and trees."""

from __future__ import annotations

from .hypergraph import HPath, Hypergraph
from .trees import RootedTree


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def hypergraph_dot(graph: Hypergraph, highlight: HPath | None = None, name: str = "H") -> str:
    """Each hyperarc becomes a small junction point: tail -> junction -> both heads."""
    marked = set(highlight.arcs) if highlight is not None else set()
    lines = [f"digraph {name} {{", "\trankdir=LR;", "\tnode [shape=ellipse];"]
    for node in sorted(graph.nodes, key=str):
        lines.append(f"\t{_quote(str(node))};")
    for k, a in enumerate(sorted(graph.arcs)):
        j = f"arc{k}"
        attrs = " [color=red, penwidth=2]" if a in marked else ""
        lines.append(f'\t{j} [shape=point, label=""];')
        lines.append(f"\t{_quote(str(a.tail))} -> {j}{attrs};")
        for h in a.heads:
            lines.append(f"\t{j} -> {_quote(str(h))}{attrs};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def tree_dot(tree: RootedTree, name: str = "T") -> str:
    lines = [f"digraph {name} {{", "\tnode [shape=plaintext];"]
    counter = 0

    def walk(node) -> str:
        nonlocal counter
        ident = f"n{counter}"
        counter += 1
        if node.is_leaf:
            lines.append(f"\t{ident} [label={_quote(node.label)}];")
        else:
            lines.append(f'\t{ident} [shape=point, label=""];')
            for child in node.children:
                lines.append(f"\t{ident} -> {walk(child)};")
        return ident

    walk(tree.root)
    lines.append("}")
    return "\n".join(lines) + "\n"
