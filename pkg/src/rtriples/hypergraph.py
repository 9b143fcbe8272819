"""1-2-directed hypergraphs: arcs u -> {v, v'} and acyclic path search.

Nodes are either unordered leaf pairs (mirroring triples) or free-standing
named nodes used for padding. A simple path is a sequence of distinct arcs
where each arc's tail is a head of its predecessor; it is cyclic once some
arc points back at the tail of an earlier arc.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Iterator, Union

from .errors import (ArcNotInGraph, BudgetExceeded, MalformedArc, ParseError,
                     ResourceExhausted, UnknownNode)
from .triples import Leaf, RootedTriple, check_leaf

DEFAULT_EXPANSION_BUDGET = 10**7
DEFAULT_ARC_BUDGET = 10**6


@dataclass(frozen=True, order=True)
class PairNode:
    p: Leaf
    q: Leaf

    def __post_init__(self) -> None:
        if self.p == self.q:
            raise MalformedArc(f"pair node needs two distinct leaves, got {self.p!r} twice")
        if self.q < self.p:
            p, q = self.q, self.p
            object.__setattr__(self, "p", p)
            object.__setattr__(self, "q", q)

    @property
    def leaves(self) -> frozenset[Leaf]:
        return frozenset((self.p, self.q))

    def __str__(self) -> str:
        return f"{self.p},{self.q}"


@dataclass(frozen=True, order=True)
class NamedNode:
    name: str

    def __post_init__(self) -> None:
        if not self.name or "," in self.name or any(c.isspace() for c in self.name):
            raise ValueError(f"invalid node name {self.name!r}")

    def __str__(self) -> str:
        return self.name


HNode = Union[PairNode, NamedNode]


def parse_node(text: str) -> HNode:
    text = text.strip()
    if "," in text:
        p, _, q = text.partition(",")
        return PairNode(check_leaf(p.strip()), check_leaf(q.strip()))
    return NamedNode(text)


def _key(node: HNode) -> str:
    return str(node)


@dataclass(frozen=True)
class Hyperarc:
    tail: HNode
    heads: tuple[HNode, HNode]

    def __post_init__(self) -> None:
        v, w = self.heads
        if len({self.tail, v, w}) != 3:
            raise MalformedArc(f"tail and both heads must be distinct: {self.tail} -> {v} {w}")
        if _key(w) < _key(v):
            object.__setattr__(self, "heads", (w, v))

    def __str__(self) -> str:
        return f"{self.tail} -> {self.heads[0]} {self.heads[1]}"

    def __lt__(self, other: Hyperarc) -> bool:
        return str(self) < str(other)


def arc(tail: HNode, head1: HNode, head2: HNode) -> Hyperarc:
    return Hyperarc(tail, (head1, head2))


def arc_of_triple(t: RootedTriple) -> Hyperarc:
    """pq|o  ->  pq -> {po, qo}."""
    return Hyperarc(PairNode(t.p, t.q), (PairNode(t.p, t.o), PairNode(t.q, t.o)))


def triple_of_arc(a: Hyperarc) -> RootedTriple:
    """u -> {v, v'}  ->  (v xor v') | (v and v')."""
    nodes = (a.tail, *a.heads)
    if not all(isinstance(n, PairNode) for n in nodes):
        raise MalformedArc(f"arc {a} has a node that is not a leaf pair")
    v, w = a.heads
    shared = v.leaves & w.leaves
    if len(shared) != 1:
        raise MalformedArc(f"heads of {a} must share exactly one leaf")
    if a.tail.leaves != v.leaves ^ w.leaves:
        raise MalformedArc(f"tail of {a} is not the symmetric difference of its heads")
    (o,) = shared
    return RootedTriple(a.tail.p, a.tail.q, o)


@dataclass(frozen=True)
class Hypergraph:
    nodes: frozenset
    arcs: frozenset

    def __post_init__(self) -> None:
        for a in self.arcs:
            if a.tail not in self.nodes or not set(a.heads) <= self.nodes:
                raise MalformedArc(f"arc {a} uses a node outside the graph")

    @classmethod
    def from_arcs(cls, arcs: Iterable[Hyperarc], extra_nodes: Iterable[HNode] = ()) -> Hypergraph:
        arcs = frozenset(arcs)
        nodes = set(extra_nodes)
        for a in arcs:
            nodes.add(a.tail)
            nodes.update(a.heads)
        return cls(frozenset(nodes), arcs)

    @classmethod
    def from_triples(cls, triples: Iterable[RootedTriple]) -> Hypergraph:
        return cls.from_arcs(arc_of_triple(t) for t in triples)

    @cached_property
    def out_arcs(self) -> dict:
        """Outgoing arcs per node, in lexicographic serialization order."""
        table: dict = {n: [] for n in self.nodes}
        for a in sorted(self.arcs):
            table[a.tail].append(a)
        return table

    def require(self, *nodes: HNode) -> None:
        for n in nodes:
            if n not in self.nodes:
                raise UnknownNode(f"node {n} not in hypergraph")

    def triples(self) -> frozenset[RootedTriple]:
        return frozenset(triple_of_arc(a) for a in self.arcs)


@dataclass(frozen=True)
class HPath:
    arcs: tuple[Hyperarc, ...]
    source: HNode
    dest: HNode

    def __len__(self) -> int:
        return len(self.arcs)

    def triples(self) -> list[RootedTriple]:
        return [triple_of_arc(a) for a in self.arcs]

    def serialized(self) -> tuple[str, ...]:
        return tuple(str(a) for a in self.arcs)


class PathStatus(enum.Enum):
    NOT_A_PATH = "not-a-path"
    CYCLIC = "cyclic"
    ACYCLIC = "acyclic"


def b_connected_set(graph: Hypergraph, source: HNode) -> frozenset:
    """Least fixpoint containing ``source`` and closed under firing arcs whose tail is in it."""
    graph.require(source)
    reached = {source}
    frontier = [source]
    while frontier:
        node = frontier.pop()
        for a in graph.out_arcs[node]:
            for h in a.heads:
                if h not in reached:
                    reached.add(h)
                    frontier.append(h)
    return frozenset(reached)


def classify_arcs(arcs: Iterable[Hyperarc]) -> PathStatus:
    """Classify a sequence of arcs without reference to any graph."""
    arcs = list(arcs)
    if len(set(arcs)) != len(arcs):
        return PathStatus.NOT_A_PATH
    for prev, nxt in zip(arcs, arcs[1:]):
        if nxt.tail not in prev.heads:
            return PathStatus.NOT_A_PATH
    seen_tails = set()
    for a in arcs:
        seen_tails.add(a.tail)
        if seen_tails.intersection(a.heads):
            return PathStatus.CYCLIC
    return PathStatus.ACYCLIC


def validate_path(graph: Hypergraph, arcs: Iterable[Hyperarc]) -> PathStatus:
    arcs = list(arcs)
    for a in arcs:
        if a not in graph.arcs:
            raise ArcNotInGraph(f"arc {a} not in hypergraph")
    return classify_arcs(arcs)


class _Budget:
    def __init__(self, limit: int):
        self.limit = limit
        self.used = 0

    def spend(self) -> None:
        self.used += 1
        if self.used > self.limit:
            raise ResourceExhausted(f"path search exceeded {self.limit} expansions")


def _acyclic_paths(graph: Hypergraph, source: HNode, dest: HNode,
                   budget: _Budget, max_len: float = math.inf) -> Iterator[tuple[Hyperarc, ...]]:
    """DFS over acyclic arc sequences from ``source``, stopping each at its first hit on ``dest``.

    Yields in lexicographic order of the arc serialization sequence. Distinct
    tails are implied by acyclicity, so arcs never repeat.
    """
    stack: list[Hyperarc] = []
    tails: set = set()
    # explicit frames [node, remaining out-arcs, remaining heads of the arc on top];
    # dummy paths from amplify run far deeper than the recursion limit
    frames: list[list] = []

    def enter(node: HNode) -> None:
        if len(stack) < max_len:
            tails.add(node)
            frames.append([node, iter(graph.out_arcs[node]), None])

    enter(source)
    while frames:
        frame = frames[-1]
        if frame[2] is not None:
            h = next(frame[2], None)
            if h is None:
                frame[2] = None
                stack.pop()
            else:
                enter(h)
            continue
        a = next(frame[1], None)
        if a is None:
            tails.discard(frame[0])
            frames.pop()
            continue
        budget.spend()
        if tails.intersection(a.heads):
            continue
        stack.append(a)
        if dest in a.heads:
            yield tuple(stack)
            stack.pop()
        else:
            frame[2] = iter(a.heads)


def find_acyclic_path(graph: Hypergraph, source: HNode, dest: HNode,
                      max_expansions: int = DEFAULT_EXPANSION_BUDGET) -> HPath | None:
    """Some acyclic path from ``source`` to ``dest``, or None if there is none.

    Raises ResourceExhausted when the budget runs out before the search settles.
    """
    graph.require(source, dest)
    if source == dest:
        return HPath((), source, dest)
    for arcs in _acyclic_paths(graph, source, dest, _Budget(max_expansions)):
        return HPath(arcs, source, dest)
    return None


def min_acyclic_path(graph: Hypergraph, source: HNode, dest: HNode,
                     max_expansions: int = DEFAULT_EXPANSION_BUDGET) -> HPath | None:
    """Shortest acyclic path by arc count; ties go to the lexicographically smallest.

    None stands for an infeasible instance (infinite cost).
    """
    graph.require(source, dest)
    if source == dest:
        return HPath((), source, dest)
    best: tuple[Hyperarc, ...] | None = None
    budget = _Budget(max_expansions)
    bound = math.inf
    while True:
        found = None
        for arcs in _acyclic_paths(graph, source, dest, budget, max_len=bound):
            if best is None or len(arcs) < len(best):
                found = arcs
                break
        if found is None:
            break
        best = found
        # restart bounded strictly below the new best; DFS order keeps ties lexicographic
        bound = len(best) - 1
    return None if best is None else HPath(best, source, dest)


def path_cost(path: HPath | None) -> float:
    return math.inf if path is None else len(path)


def is_cyclic_arcset(arcs: Iterable[Hyperarc]) -> bool:
    """True iff the arcs contain a cycle: a simple path whose last arc points at its first tail.

    Such cycles are exactly directed cycles of the tail -> head digraph
    (a node-simple cycle there uses one arc per distinct tail).
    """
    succ: dict = {}
    for a in arcs:
        succ.setdefault(a.tail, set()).update(a.heads)
    white, grey, black = 0, 1, 2
    color: dict = {}
    for start in succ:
        if color.get(start, white) != white:
            continue
        color[start] = grey
        stack = [(start, iter(succ.get(start, ())))]
        while stack:
            node, it = stack[-1]
            nxt = next(it, None)
            if nxt is None:
                color[node] = black
                stack.pop()
                continue
            state = color.get(nxt, white)
            if state == grey:
                return True
            if state == white:
                color[nxt] = grey
                stack.append((nxt, iter(succ.get(nxt, ()))))
    return False


@dataclass(frozen=True)
class AmplificationSizes:
    """Arithmetic of the padding construction for an n-node instance."""

    n: int
    eps: Fraction
    exponent: int
    dummy_length: int
    padded_nodes: int         # n + D - 1, the count without dummy sinks
    total_nodes: int          # including one fresh sink per dummy arc
    log_upper_positive: float  # log UB+ = (1 - eps) log(n') + log(n - 1)
    log_lower_negative: float  # log LB- = log D

    @property
    def separated(self) -> bool:
        return self.log_upper_positive < self.log_lower_negative


def amplification_sizes(n: int, eps: Fraction | float | str) -> AmplificationSizes:
    eps = Fraction(str(eps)) if not isinstance(eps, Fraction) else eps
    if not 0 < eps < 1:
        raise ValueError(f"eps must lie in (0, 1), got {eps}")
    if n < 2:
        raise ValueError("need at least two nodes")
    exponent = math.ceil(1 + 1 / eps)
    d = n ** exponent
    n_prime = n + d - 1
    log_ub = float(1 - eps) * math.log(n_prime) + math.log(n - 1)
    return AmplificationSizes(n, eps, exponent, d, n_prime, n_prime + d, log_ub, math.log(d))


def amplify(graph: Hypergraph, source: HNode, dest: HNode, eps: Fraction | float | str,
            arc_budget: int = DEFAULT_ARC_BUDGET) -> Hypergraph:
    """Pad ``graph`` with a fresh acyclic source->dest path of n^ceil(1+1/eps) dummy arcs.

    Dummy arc k is w_{k-1} -> {w_k, s_k} with w_0 = source and w_D = dest;
    every w_k and s_k is a fresh NamedNode.
    """
    graph.require(source, dest)
    if source == dest:
        raise ValueError("source and destination must differ")
    sizes = amplification_sizes(len(graph.nodes), eps)
    d = sizes.dummy_length
    if d > arc_budget:
        raise BudgetExceeded(f"dummy path of {d} arcs exceeds the arc budget of {arc_budget}")
    taken = [n.name for n in graph.nodes if isinstance(n, NamedNode)]
    prefix = "dummy"
    while any(name.startswith(prefix) for name in taken):
        prefix = "_" + prefix
    chain = [source] + [NamedNode(f"{prefix}_w{k}") for k in range(1, d)] + [dest]
    sinks = [NamedNode(f"{prefix}_s{k}") for k in range(1, d + 1)]
    new_arcs = [Hyperarc(chain[k], (chain[k + 1], sinks[k])) for k in range(d)]
    return Hypergraph(graph.nodes | frozenset(chain) | frozenset(sinks),
                      graph.arcs | frozenset(new_arcs))


def parse_hypergraph(text: str) -> Hypergraph:
    """One arc per line ``tail -> head1 head2``; a line holding a single node declares it."""
    arcs = []
    extra = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.split("#", 1)[0].strip()
        if not stripped:
            continue
        try:
            if "->" in stripped:
                tail, _, heads = stripped.partition("->")
                parts = heads.split()
                if len(parts) != 2:
                    raise ParseError("an arc needs exactly two heads")
                arcs.append(arc(parse_node(tail), parse_node(parts[0]), parse_node(parts[1])))
            else:
                if len(stripped.split()) != 1:
                    raise ParseError(f"cannot parse {stripped!r}")
                extra.append(parse_node(stripped))
        except (ValueError, MalformedArc) as exc:
            raise ParseError(str(exc), line=lineno) from exc
    return Hypergraph.from_arcs(arcs, extra)


def format_hypergraph(graph: Hypergraph) -> str:
    lines = [str(a) for a in sorted(graph.arcs)]
    used = set()
    for a in graph.arcs:
        used.add(a.tail)
        used.update(a.heads)
    lines += sorted(str(n) for n in graph.nodes - used)
    return "".join(line + "\n" for line in lines)
