"""Brute-force references over enumerated binary trees.

These deliberately avoid BUILD: they read the definitions literally,
intersecting r(T) over every binary tree T that displays the input.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable

from .errors import InconsistentInput
from .trees import enumerate_binary_trees
from .triples import Leaf, RootedTriple, leaf_set


@lru_cache(maxsize=64)
def _tree_triples(leaves: frozenset[Leaf]) -> tuple[frozenset[RootedTriple], ...]:
    return tuple(tree.displayed_triples() for tree in enumerate_binary_trees(leaves))


def displaying_trees(triples: Iterable[RootedTriple],
                     leaves: Iterable[Leaf] | None = None) -> list[frozenset[RootedTriple]]:
    """r(T) for every binary T on ``leaves`` (default L(R)) that displays all of R."""
    triples = frozenset(triples)
    universe = frozenset(leaves) if leaves is not None else leaf_set(triples)
    if not universe:
        return [frozenset()]
    return [r for r in _tree_triples(universe) if triples <= r]


def consistent_by_enumeration(triples: Iterable[RootedTriple]) -> bool:
    return bool(displaying_trees(triples))


def closure_oracle(triples: Iterable[RootedTriple],
                   leaves: Iterable[Leaf] | None = None) -> frozenset[RootedTriple]:
    triples = frozenset(triples)
    candidates = displaying_trees(triples, leaves)
    if not candidates:
        raise InconsistentInput("no binary tree displays the triple set")
    return frozenset.intersection(*candidates)


def entails_oracle(triples: Iterable[RootedTriple], t: RootedTriple) -> bool:
    triples = frozenset(triples)
    candidates = displaying_trees(triples, leaf_set(triples) | t.leaves)
    if not candidates:
        raise InconsistentInput("no binary tree displays the triple set")
    return all(t in r for r in candidates)
