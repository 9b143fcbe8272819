"""Ahograph, BUILD, and entailment/closure for consistent triple sets."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Union

from .errors import EmptyLeafSet, InconsistentInput
from .trees import Node, RootedTree, leaf, join
from .triples import Leaf, RootedTriple, candidate_triples, leaf_set


@dataclass(frozen=True)
class Ahograph:
    """Edge-labelled multigraph [R, L]: one A-edge {p, q} labelled o per pq|o with p, q, o in L."""

    nodes: frozenset[Leaf]
    edges: tuple[tuple[Leaf, Leaf, Leaf], ...]

    def components(self) -> list[frozenset[Leaf]]:
        """Connected components, sorted by their smallest leaf."""
        parent = {v: v for v in self.nodes}

        def find(v: Leaf) -> Leaf:
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        for p, q, _ in self.edges:
            rp, rq = find(p), find(q)
            if rp != rq:
                parent[max(rp, rq)] = min(rp, rq)
        groups: dict[Leaf, set[Leaf]] = {}
        for v in self.nodes:
            groups.setdefault(find(v), set()).add(v)
        return sorted((frozenset(g) for g in groups.values()), key=min)


def ahograph(triples: Iterable[RootedTriple], leaves: Iterable[Leaf]) -> Ahograph:
    nodes = frozenset(leaves)
    edges = tuple(sorted((t.p, t.q, t.o) for t in triples
                         if t.p in nodes and t.q in nodes and t.o in nodes))
    return Ahograph(nodes, edges)


@dataclass(frozen=True)
class Consistent:
    tree: RootedTree
    consistent = True


@dataclass(frozen=True)
class Inconsistent:
    # leaf set on which the Ahograph came out connected
    witness: frozenset[Leaf]
    consistent = False


ConsistencyResult = Union[Consistent, Inconsistent]


def _build(triples: list[RootedTriple], leaves: frozenset[Leaf]) -> Node | frozenset[Leaf]:
    if len(leaves) == 1:
        (only,) = leaves
        return leaf(only)
    components = ahograph(triples, leaves).components()
    if len(components) == 1:
        return leaves
    children = []
    for comp in components:
        sub = [t for t in triples if t.p in comp and t.q in comp and t.o in comp]
        result = _build(sub, comp)
        if isinstance(result, frozenset):
            return result
        children.append(result)
    return join(*children)


def build(triples: Iterable[RootedTriple], leaves: Iterable[Leaf]) -> ConsistencyResult:
    """Aho et al.'s BUILD on [R, L].

    Children of every internal node are ordered by their smallest leaf name,
    so equal inputs give equal trees.
    """
    leaves = frozenset(leaves)
    if not leaves:
        raise EmptyLeafSet("BUILD needs at least one leaf")
    relevant = [t for t in triples if t.leaves <= leaves]
    result = _build(relevant, leaves)
    if isinstance(result, frozenset):
        return Inconsistent(result)
    return Consistent(RootedTree(result))


def is_consistent(triples: Iterable[RootedTriple]) -> bool:
    triples = list(triples)
    if not triples:
        return True
    return build(triples, leaf_set(triples)).consistent


def _require_consistent(triples: frozenset[RootedTriple]) -> Consistent:
    result = build(triples, leaf_set(triples))
    if not result.consistent:
        raise InconsistentInput(f"triple set is inconsistent (witness {sorted(result.witness)})")
    return result


def entails_consistent(triples: Iterable[RootedTriple], t: RootedTriple) -> bool:
    """R |- t for consistent R: both alternative resolutions of t's leaves contradict R."""
    triples = frozenset(triples)
    if triples:
        _require_consistent(triples)
    if t in triples:
        return True
    if not t.leaves <= leaf_set(triples):
        return False
    alt1, alt2 = t.alternatives()
    return not is_consistent(triples | {alt1}) and not is_consistent(triples | {alt2})


def closure_consistent(triples: Iterable[RootedTriple]) -> frozenset[RootedTriple]:
    triples = frozenset(triples)
    if not triples:
        return frozenset()
    tree = _require_consistent(triples).tree
    out = set(triples)
    for t in candidate_triples(leaf_set(triples)):
        # an entailed triple is displayed by every tree in <R>, BUILD's included
        if t in out or not tree.displays(t):
            continue
        alt1, alt2 = t.alternatives()
        if not is_consistent(triples | {alt1}) and not is_consistent(triples | {alt2}):
            out.add(t)
    return frozenset(out)


def _orientations(t: RootedTriple) -> tuple[tuple[Leaf, Leaf, Leaf], ...]:
    return (t.p, t.q, t.o), (t.q, t.p, t.o)


def _dyadic_ordered(t1: RootedTriple, t2: RootedTriple) -> set[RootedTriple]:
    out = set()
    for p, q, o in _orientations(t1):
        for a, b, c in _orientations(t2):
            # {pq|o, qp'|o} |- pp'|o
            if a == q and c == o and b != p:
                out.add(RootedTriple(p, b, o))
            # {pq|o, qo|o'} |- {pq|o', po|o'}
            if a == q and b == o and c not in (p, q, o):
                out.add(RootedTriple(p, q, c))
                out.add(RootedTriple(p, o, c))
            # {pp'|o, oo'|p} |- {pp'|o', oo'|p'}
            if a == o and c == p and b not in (p, q, o):
                out.add(RootedTriple(p, q, b))
                out.add(RootedTriple(o, b, q))
    return out


def dyadic_apply(t1: RootedTriple, t2: RootedTriple) -> frozenset[RootedTriple]:
    """Every conclusion of the three dyadic inference rules on the pair, in either order."""
    return frozenset(_dyadic_ordered(t1, t2) | _dyadic_ordered(t2, t1))
