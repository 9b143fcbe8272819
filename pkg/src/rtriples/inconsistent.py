"""Entailment and closure for possibly inconsistent triple sets.

R |- t holds when some consistent subset of R entails t. Closure is
monotone in the premise set, so only maximal consistent subsets need to
be inspected.
"""

from __future__ import annotations

from typing import Iterable, Iterator, NamedTuple

from .consistency import closure_consistent, entails_consistent, is_consistent
from .errors import SetTooLarge
from .triples import RootedTriple

MAX_SUBSET_SEARCH = 24


def _shrink_core(included: list[RootedTriple], pool: list[RootedTriple]) -> list[RootedTriple]:
    """A minimal C within ``pool`` with ``included + C`` inconsistent (deletion filter)."""
    core = list(pool)
    k = 0
    while k < len(core):
        trial = core[:k] + core[k + 1:]
        if not is_consistent(included + trial):
            core = trial
        else:
            k += 1
    return core


def maximal_consistent_subsets(triples: Iterable[RootedTriple],
                               max_size: int = MAX_SUBSET_SEARCH) -> Iterator[frozenset[RootedTriple]]:
    """Yield each maximal consistent subset of ``triples`` exactly once.

    Conflict-directed branching: while the included set plus the undecided
    pool is inconsistent, shrink the pool to a minimal core C and branch on
    the first core member left out (c_1 out; c_1 in, c_2 out; ...). The
    branches are disjoint and together cover every consistent set. A branch
    dies as soon as some deliberately excluded triple becomes consistent
    with everything still reachable, since it could then never be blocked.
    """
    items = sorted(frozenset(triples))
    if len(items) > max_size:
        raise SetTooLarge(f"{len(items)} triples exceeds the subset-search guard of {max_size}")

    def search(included: list[RootedTriple], pool: list[RootedTriple],
               excluded: list[RootedTriple]) -> Iterator[frozenset[RootedTriple]]:
        # triples clashing with `included` alone are blocked for good
        pool = [x for x in pool if is_consistent(included + [x])]
        reachable = included + pool
        if any(is_consistent(reachable + [x]) for x in excluded):
            return
        if is_consistent(reachable):
            yield frozenset(reachable)
            return
        core = _shrink_core(included, pool)
        for k, out in enumerate(core):
            keep = core[:k]
            if not is_consistent(included + keep):
                break
            rest = [x for x in pool if x not in keep and x != out]
            yield from search(included + keep, rest, excluded + [out])

    yield from search([], items, [])


class Entailment(NamedTuple):
    entailed: bool
    witness: frozenset[RootedTriple] | None = None


def entails_inconsistent(triples: Iterable[RootedTriple], t: RootedTriple,
                         max_size: int = MAX_SUBSET_SEARCH) -> Entailment:
    """Decide R |- t; on success the witness is a maximal consistent subset entailing t."""
    triples = frozenset(triples)
    if is_consistent(triples):
        ok = entails_consistent(triples, t)
        return Entailment(ok, triples if ok else None)
    for subset in maximal_consistent_subsets(triples, max_size):
        if entails_consistent(subset, t):
            return Entailment(True, subset)
    return Entailment(False, None)


def closure_inconsistent(triples: Iterable[RootedTriple],
                         max_size: int = MAX_SUBSET_SEARCH) -> frozenset[RootedTriple]:
    """Union of the closures of all maximal consistent subsets (equals R's closure)."""
    triples = frozenset(triples)
    if is_consistent(triples):
        return closure_consistent(triples)
    out: set[RootedTriple] = set()
    for subset in maximal_consistent_subsets(triples, max_size):
        out |= closure_consistent(subset)
    return frozenset(out)
