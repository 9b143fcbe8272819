"""Brute-force references and generators for the tests. No pruning anywhere."""

from __future__ import annotations

import random
from collections import deque

from rtriples.hypergraph import Hyperarc, Hypergraph, NamedNode


def simple_paths(graph: Hypergraph, source, dest):
    """Every sequence of distinct, chained arcs from source whose last arc reaches dest.

    Paths stop at the first arc that reaches dest, matching the path definition.
    """
    out = []
    arcs = sorted(graph.arcs)

    def grow(seq, frontier):
        for a in arcs:
            if a in seq or a.tail not in frontier:
                continue
            nxt = seq + [a]
            if dest in a.heads:
                out.append(tuple(nxt))
            else:
                grow(nxt, set(a.heads))

    grow([], {source})
    return out


def is_acyclic_seq(seq) -> bool:
    for k, a in enumerate(seq):
        earlier = {b.tail for b in seq[:k + 1]}
        if earlier & set(a.heads):
            return False
    return True


def acyclic_paths(graph, source, dest):
    return [p for p in simple_paths(graph, source, dest) if is_acyclic_seq(p)]


def digraph_reachable(graph: Hypergraph, source):
    seen = {source}
    todo = deque([source])
    while todo:
        u = todo.popleft()
        for a in graph.arcs:
            if a.tail == u:
                for h in a.heads:
                    if h not in seen:
                        seen.add(h)
                        todo.append(h)
    return seen


def random_hypergraph(rng: random.Random, max_arcs: int = 10, n_nodes: int = 7) -> Hypergraph:
    nodes = [NamedNode(f"v{k}") for k in range(n_nodes)]
    arcs = set()
    for _ in range(rng.randint(0, max_arcs)):
        t, h1, h2 = rng.sample(nodes, 3)
        arcs.add(Hyperarc(t, (h1, h2)))
    return Hypergraph.from_arcs(arcs, nodes)


def random_triples(rng: random.Random, leaves: str, size: int) -> frozenset:
    from rtriples.triples import RootedTriple
    out = set()
    while len(out) < size:
        p, q, o = rng.sample(leaves, 3)
        out.add(RootedTriple(p, q, o))
    return frozenset(out)
