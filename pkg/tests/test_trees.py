import pytest

from rtriples.errors import TreeError, UnknownLeaf
from rtriples.trees import (RootedTree, displayed_triples, enumerate_binary_trees, parse_newick)
from rtriples.triples import RootedTriple, triple_set


def T(nested):
    return RootedTree.from_nested(nested)


def test_displays_examples():
    ab_c = RootedTriple("a", "b", "c")
    assert T((("a", "b"), "c")).displays(ab_c)
    assert not T((("a", "c"), "b")).displays(ab_c)
    assert T(((("a", "b"), "c"), "d")).displays(RootedTriple("a", "c", "d"))


def test_displayed_triples_examples():
    assert displayed_triples(T((("a", "b"), "c"))) == triple_set(["ab|c"])
    assert displayed_triples(T(((("a", "b"), "c"), "d"))) == triple_set(["ab|c", "ab|d", "ac|d", "bc|d"])
    assert displayed_triples(T(("a", "b", "c"))) == frozenset()


def test_unknown_leaf():
    with pytest.raises(UnknownLeaf):
        T((("a", "b"), "c")).displays(RootedTriple("a", "b", "z"))


@pytest.mark.parametrize("n,count", [(1, 1), (2, 1), (3, 3), (4, 15), (5, 105), (6, 945)])
def test_enumeration_counts(n, count):
    trees = list(enumerate_binary_trees("abcdef"[:n]))
    assert len(trees) == count
    assert len(set(trees)) == count
    assert all(t.is_binary() for t in trees)


def test_enumeration_guard():
    from rtriples.errors import UniverseTooLarge
    with pytest.raises(UniverseTooLarge):
        list(enumerate_binary_trees("abcdefghi"))


@pytest.mark.parametrize("text", ["((a,b),c);", "(a,b,c);", "(((a,b),c),(d,e));", "a;"])
def test_newick_round_trip(text):
    tree = parse_newick(text)
    assert tree.newick() == text
    assert parse_newick(tree.newick()) == tree


@pytest.mark.parametrize("bad", ["((a,b),c", "(a,a);", "(a,b));", "();"])
def test_newick_rejects(bad):
    with pytest.raises((TreeError, ValueError)):
        parse_newick(bad)
