"""Rooted phylogenetic trees with uniquely labelled leaves.

Trees may be non-binary (BUILD produces multifurcations); the display
test is the lca criterion, which is valid for any rooted tree.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Union

from .errors import TreeError, UniverseTooLarge, UnknownLeaf
from .triples import Leaf, RootedTriple, check_leaf

MAX_ENUMERATION_LEAVES = 8

Nested = Union[str, tuple]


@dataclass(frozen=True)
class Node:
    label: Leaf | None = None
    children: tuple[Node, ...] = ()

    @property
    def is_leaf(self) -> bool:
        return not self.children

    def leaves(self) -> Iterator[Leaf]:
        if self.is_leaf:
            yield self.label
        else:
            for child in self.children:
                yield from child.leaves()

    def newick(self) -> str:
        if self.is_leaf:
            return self.label
        return "(" + ",".join(child.newick() for child in self.children) + ")"


def leaf(label: Leaf) -> Node:
    return Node(check_leaf(label))


def join(*children: Node) -> Node:
    return Node(None, tuple(children))


class RootedTree:
    """Immutable rooted tree; lca queries run against a precomputed parent table."""

    def __init__(self, root: Node):
        self.root = root
        self._parent: list[int] = []
        self._depth: list[int] = []
        self._leaf_index: dict[Leaf, int] = {}
        self._index(root, -1, 0)

    def _index(self, node: Node, parent: int, depth: int) -> None:
        stack = [(node, parent, depth)]
        while stack:
            node, parent, depth = stack.pop()
            idx = len(self._parent)
            self._parent.append(parent)
            self._depth.append(depth)
            if node.is_leaf:
                if node.label is None:
                    raise TreeError("leaf without a label")
                if node.label in self._leaf_index:
                    raise TreeError(f"leaf {node.label!r} appears more than once")
                self._leaf_index[node.label] = idx
            else:
                if node.label is not None:
                    raise TreeError("internal nodes carry no label")
                if len(node.children) < 2:
                    raise TreeError("internal node with a single child")
                for child in reversed(node.children):
                    stack.append((child, idx, depth + 1))

    @classmethod
    def from_nested(cls, nested: Nested) -> RootedTree:
        """Build from nested tuples, e.g. ``(("a", "b"), "c")``."""

        def convert(obj: Nested) -> Node:
            if isinstance(obj, str):
                return leaf(obj)
            return join(*(convert(child) for child in obj))

        return cls(convert(nested))

    @property
    def leaves(self) -> frozenset[Leaf]:
        return frozenset(self._leaf_index)

    def is_binary(self) -> bool:
        stack = [self.root]
        while stack:
            node = stack.pop()
            if not node.is_leaf:
                if len(node.children) != 2:
                    return False
                stack.extend(node.children)
        return True

    def _lca(self, a: int, b: int) -> int:
        depth, parent = self._depth, self._parent
        while depth[a] > depth[b]:
            a = parent[a]
        while depth[b] > depth[a]:
            b = parent[b]
        while a != b:
            a, b = parent[a], parent[b]
        return a

    def _leaf(self, name: Leaf) -> int:
        try:
            return self._leaf_index[name]
        except KeyError:
            raise UnknownLeaf(f"leaf {name!r} not in tree") from None

    def lca_depth(self, p: Leaf, q: Leaf) -> int:
        return self._depth[self._lca(self._leaf(p), self._leaf(q))]

    def displays(self, t: RootedTriple) -> bool:
        p, q, o = self._leaf(t.p), self._leaf(t.q), self._leaf(t.o)
        # both lcas are ancestors of p, so "strictly below" == "strictly deeper"
        return self._depth[self._lca(p, q)] > self._depth[self._lca(p, o)]

    def displayed_triples(self) -> frozenset[RootedTriple]:
        out = []
        for a, b, c in combinations(sorted(self._leaf_index), 3):
            for t in (RootedTriple(a, b, c), RootedTriple(a, c, b), RootedTriple(b, c, a)):
                if self.displays(t):
                    out.append(t)
                    break
        return frozenset(out)

    def newick(self) -> str:
        return self.root.newick() + ";"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, RootedTree) and self.root == other.root

    def __hash__(self) -> int:
        return hash(self.root)

    def __repr__(self) -> str:
        return f"RootedTree({self.newick()!r})"


def displays(tree: RootedTree, t: RootedTriple) -> bool:
    return tree.displays(t)


def displayed_triples(tree: RootedTree) -> frozenset[RootedTriple]:
    """r(T). At most one triple per 3-subset of leaves; exactly one if T is binary."""
    return tree.displayed_triples()


_TOKEN = re.compile(r"\s*([(),;]|[^(),;\s]+)")


def parse_newick(text: str) -> RootedTree:
    """Parse topology-only Newick such as ``((a,b),c);``."""
    tokens = [m.group(1) for m in _TOKEN.finditer(text)]
    if "".join(tokens) != re.sub(r"\s+", "", text):
        raise TreeError(f"unparseable Newick: {text!r}")
    pos = 0

    def parse_node() -> Node:
        nonlocal pos
        if pos >= len(tokens):
            raise TreeError("unexpected end of Newick string")
        tok = tokens[pos]
        if tok == "(":
            pos += 1
            children = [parse_node()]
            while pos < len(tokens) and tokens[pos] == ",":
                pos += 1
                children.append(parse_node())
            if pos >= len(tokens) or tokens[pos] != ")":
                raise TreeError("missing ')' in Newick string")
            pos += 1
            return join(*children)
        if tok in "),;":
            raise TreeError(f"unexpected {tok!r} in Newick string")
        pos += 1
        try:
            return leaf(tok)
        except ValueError as exc:
            raise TreeError(str(exc)) from exc

    root = parse_node()
    if tokens[pos:] != [";"]:
        raise TreeError("Newick string must end with a single ';'")
    return RootedTree(root)


def _insertions(tree: Nested, new: str) -> Iterator[Nested]:
    # hang `new` on every edge of `tree`, including the edge above the root
    yield (tree, new)
    if isinstance(tree, tuple):
        left, right = tree
        for sub in _insertions(left, new):
            yield (sub, right)
        for sub in _insertions(right, new):
            yield (left, sub)


def enumerate_binary_trees(leaves: Iterable[Leaf]) -> Iterator[RootedTree]:
    """Every rooted binary tree on ``leaves``, each exactly once: (2n-3)!! in total."""
    ordered = sorted(set(leaves))
    if not ordered:
        raise TreeError("cannot enumerate trees on an empty leaf set")
    if len(ordered) > MAX_ENUMERATION_LEAVES:
        raise UniverseTooLarge(
            f"{len(ordered)} leaves exceeds the enumeration guard of {MAX_ENUMERATION_LEAVES}")

    def grow(tree: Nested, rest: list[str]) -> Iterator[Nested]:
        if not rest:
            yield tree
            return
        for bigger in _insertions(tree, rest[0]):
            yield from grow(bigger, rest[1:])

    if len(ordered) == 1:
        yield RootedTree(leaf(ordered[0]))
        return
    for nested in grow((ordered[0], ordered[1]), ordered[2:]):
        yield RootedTree.from_nested(nested)
