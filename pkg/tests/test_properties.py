"""Hypothesis checks of the algebraic invariants."""

import math

from hypothesis import assume, given, settings
from hypothesis import strategies as st

from rtriples.consistency import build, closure_consistent, is_consistent
from rtriples.hypergraph import (Hyperarc, Hypergraph, NamedNode, PathStatus,
                                 amplification_sizes, arc_of_triple, b_connected_set,
                                 find_acyclic_path, format_hypergraph, parse_hypergraph,
                                 triple_of_arc, validate_path)
from rtriples.inconsistent import closure_inconsistent
from rtriples.oracles import closure_oracle, consistent_by_enumeration
from rtriples.reduction import path_length_formula, path_of_assignment, reduce
from rtriples.sat import CnfFormula, all_assignments, brute_force_sat, eval_assignment
from rtriples.trees import RootedTree, displayed_triples
from rtriples.triples import RootedTriple, format_triples, leaf_set, parse_triples

from helpers import acyclic_paths, digraph_reachable, simple_paths

LEAF_NAMES = st.sampled_from(["a", "b", "c", "d", "e"])
WIDE_LEAVES = st.from_regex(r"[A-Za-z0-9_+]{1,6}", fullmatch=True)


@st.composite
def triples(draw, leaves=LEAF_NAMES):
    p, q, o = draw(st.lists(leaves, min_size=3, max_size=3, unique=True))
    return RootedTriple(p, q, o)


triple_sets = st.frozensets(triples(), max_size=8)


@st.composite
def binary_trees(draw, max_leaves=7):
    names = draw(st.lists(WIDE_LEAVES, min_size=1, max_size=max_leaves, unique=True))
    nodes = list(names)
    while len(nodes) > 1:
        i = draw(st.integers(0, len(nodes) - 1))
        a = nodes.pop(i)
        j = draw(st.integers(0, len(nodes) - 1))
        b = nodes.pop(j)
        nodes.append((a, b))
    return RootedTree.from_nested(nodes[0])


@given(triple_sets)
@settings(max_examples=200)
def test_build_agrees_with_enumeration(r):
    assert is_consistent(r) == consistent_by_enumeration(r)


@given(triple_sets)
@settings(max_examples=100)
def test_closure_matches_oracle(r):
    assume(is_consistent(r))
    assert closure_consistent(r) == closure_oracle(r)


@given(binary_trees())
def test_exactly_one_of_three(tree):
    leaves = sorted(tree.leaves)
    for t in displayed_triples(tree):
        assert not any(tree.displays(alt) for alt in t.alternatives())
    assert len(displayed_triples(tree)) == math.comb(len(leaves), 3)


@given(triple_sets, triple_sets)
def test_closure_monotone(r1, r2):
    big = r1 | r2
    assume(is_consistent(big))
    assert closure_consistent(r1) <= closure_consistent(big)


@given(st.frozensets(triples(), max_size=7))
def test_set_inside_its_closure(r):
    assert r <= closure_inconsistent(r)


@given(triple_sets)
def test_build_deterministic(r):
    leaves = leaf_set(r) or {"a"}
    assert build(r, leaves) == build(list(reversed(sorted(r))), sorted(leaves, reverse=True))


@given(triples(WIDE_LEAVES))
def test_arc_round_trip(t):
    a = arc_of_triple(t)
    assert triple_of_arc(a) == t
    assert arc_of_triple(triple_of_arc(a)) == a


@given(st.frozensets(triples(WIDE_LEAVES), max_size=12))
def test_triple_text_round_trip(r):
    assert parse_triples(format_triples(r)) == r


NODES = st.sampled_from([NamedNode(f"v{k}") for k in range(6)])


@st.composite
def hypergraphs(draw, max_arcs=8):
    arcs = set()
    for _ in range(draw(st.integers(0, max_arcs))):
        t, h1, h2 = draw(st.lists(NODES, min_size=3, max_size=3, unique=True))
        arcs.add(Hyperarc(t, (h1, h2)))
    return Hypergraph.from_arcs(arcs, [NamedNode("v0"), NamedNode("v1")])


@given(hypergraphs())
@settings(max_examples=150)
def test_b_connectivity_three_ways(g):
    src = NamedNode("v0")
    reached = b_connected_set(g, src)
    assert reached == digraph_reachable(g, src)
    for node in g.nodes - {src}:
        assert (node in reached) == bool(simple_paths(g, src, node))


@given(hypergraphs())
@settings(max_examples=150)
def test_find_matches_exhaustive(g):
    src, dst = NamedNode("v0"), NamedNode("v1")
    found = find_acyclic_path(g, src, dst)
    assert (found is None) == (not acyclic_paths(g, src, dst))
    if found is not None:
        assert validate_path(g, found.arcs) is PathStatus.ACYCLIC
        tails = [a.tail for a in found.arcs]
        assert len(set(tails)) == len(tails)


@given(hypergraphs())
def test_hypergraph_text_round_trip(g):
    assert parse_hypergraph(format_hypergraph(g)) == g


@given(st.integers(4, 30), st.sampled_from(["0.05", "0.1", "0.2", "0.24"]))
def test_amplification_separates(n, eps):
    sizes = amplification_sizes(n, eps)
    assert sizes.padded_nodes == n + sizes.dummy_length - 1
    assert sizes.separated




@st.composite
def formulas(draw, max_n=3, max_m=3):
    n = draw(st.integers(1, max_n))
    lits = st.integers(1, n).flatmap(lambda i: st.sampled_from([i, -i]))
    cls = draw(st.lists(st.lists(lits, min_size=1, max_size=3, unique=True).map(tuple),
                        min_size=1, max_size=max_m))
    return CnfFormula(n, tuple(cls))


@given(formulas(max_n=6, max_m=8))
def test_brute_force_sat_sound_and_complete(f):
    v = brute_force_sat(f)
    if v is not None:
        assert eval_assignment(f, v)
    else:
        assert not any(eval_assignment(f, w) for w in all_assignments(f.n))


@given(formulas())
@settings(max_examples=60, deadline=None)
def test_sat_iff_path_and_witness_sizes(f):
    inst = reduce(f)
    sizes = inst.leaf_group_sizes()
    assert sizes == {"L1": 4 * f.n * f.m, "L2": 2 * f.n + 2, "L3": 2 * f.m, "L4": 3, "extra": 1}
    found = find_acyclic_path(inst.hypergraph, inst.source, inst.dest)
    assert (found is not None) == (brute_force_sat(f) is not None)
    for v in all_assignments(f.n):
        if eval_assignment(f, v):
            p = path_of_assignment(inst, v)
            assert len(p) == path_length_formula(f.n, f.m)
            assert len(leaf_set(p.triples())) == len(p) + 2
