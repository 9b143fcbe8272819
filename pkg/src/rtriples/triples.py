"""Rooted triples ``pq|o`` and their text format."""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

from .errors import DuplicateLeaf, InvalidLeafName, ParseError

Leaf = str
TripleSet = frozenset  # frozenset[RootedTriple]

LEAF_PATTERN = re.compile(r"[A-Za-z0-9_+]+")


def check_leaf(name: str) -> str:
    if not isinstance(name, str) or not LEAF_PATTERN.fullmatch(name):
        raise InvalidLeafName(f"invalid leaf name {name!r}")
    return name


@dataclass(frozen=True, order=True)
class RootedTriple:
    """The constraint ``pq|o``: lca(p, q) lies strictly below lca(p, o).

    The LHS pair is stored sorted, so ``RootedTriple("b", "a", "c")`` and
    ``RootedTriple("a", "b", "c")`` compare equal.
    """

    p: Leaf
    q: Leaf
    o: Leaf

    def __post_init__(self) -> None:
        for leaf in (self.p, self.q, self.o):
            check_leaf(leaf)
        if len({self.p, self.q, self.o}) != 3:
            raise DuplicateLeaf(f"leaves of a triple must be distinct: {self.p}, {self.q}, {self.o}")
        if self.q < self.p:
            p, q = self.q, self.p
            object.__setattr__(self, "p", p)
            object.__setattr__(self, "q", q)

    @property
    def leaves(self) -> frozenset[Leaf]:
        return frozenset((self.p, self.q, self.o))

    @property
    def lhs(self) -> frozenset[Leaf]:
        return frozenset((self.p, self.q))

    def alternatives(self) -> tuple[RootedTriple, RootedTriple]:
        """The two other resolutions of the same three leaves: ``po|q`` and ``qo|p``."""
        return RootedTriple(self.p, self.o, self.q), RootedTriple(self.q, self.o, self.p)

    def __str__(self) -> str:
        return f"{self.p} {self.q} | {self.o}"


def make_triple(p: Leaf, q: Leaf, o: Leaf) -> RootedTriple:
    return RootedTriple(p, q, o)


def triple_set(triples: Iterable[RootedTriple | tuple[str, str, str] | str]) -> frozenset[RootedTriple]:
    """Convenience constructor accepting triples, 3-tuples or ``"p q | o"`` strings."""
    out = set()
    for t in triples:
        if isinstance(t, RootedTriple):
            out.add(t)
        elif isinstance(t, str):
            out.add(parse_triple(t))
        else:
            out.add(RootedTriple(*t))
    return frozenset(out)


def leaf_set(triples: Iterable[RootedTriple]) -> frozenset[Leaf]:
    """L(R): every leaf mentioned by some triple."""
    leaves: set[Leaf] = set()
    for t in triples:
        leaves.update((t.p, t.q, t.o))
    return frozenset(leaves)


def candidate_triples(leaves: Iterable[Leaf]) -> Iterator[RootedTriple]:
    """All C(|L|,2)*(|L|-2) triples over ``leaves`` in sorted order."""
    ordered = sorted(set(leaves))
    for p, q in combinations(ordered, 2):
        for o in ordered:
            if o != p and o != q:
                yield RootedTriple(p, q, o)


_TRIPLE_RE = re.compile(r"^\s*(\S+)\s+(\S+)\s*\|\s*(\S+)\s*$")
_COMPACT_RE = re.compile(r"^\s*([A-Za-z0-9_+])([A-Za-z0-9_+])\s*\|\s*(\S+)\s*$")


def parse_triple(text: str) -> RootedTriple:
    """Parse ``"p q | o"``; the single-character shorthand ``"pq|o"`` is also accepted."""
    match = _TRIPLE_RE.match(text) or _COMPACT_RE.match(text)
    if match is None:
        raise ParseError(f"cannot parse triple {text.strip()!r}")
    try:
        return RootedTriple(*match.groups())
    except (InvalidLeafName, DuplicateLeaf) as exc:
        raise ParseError(str(exc)) from exc


def parse_triples(text: str) -> frozenset[RootedTriple]:
    triples = set()
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        try:
            triples.add(parse_triple(stripped))
        except ParseError as exc:
            raise ParseError(str(exc), line=lineno) from exc
    return frozenset(triples)


def format_triples(triples: Iterable[RootedTriple]) -> str:
    return "".join(f"{t}\n" for t in sorted(triples))
