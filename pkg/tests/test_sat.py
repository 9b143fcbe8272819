import pytest

from rtriples.errors import (ClauseTooLarge, EmptyClause, IncompleteAssignment, MalformedFormula,
                             ParseError, TooManyVariables)
from rtriples.sat import (CnfFormula, all_assignments, brute_force_sat, eval_assignment,
                          format_dimacs, parse_dimacs, violated_clauses)


def test_parse_examples():
    f = parse_dimacs("p cnf 1 1\n1 -1 0")
    assert f.n == 1 and f.clauses == ((1, -1),)
    f = parse_dimacs("p cnf 2 1\n1 2 0")
    assert f.clauses == ((1, 2),)
    with pytest.raises(ClauseTooLarge):
        parse_dimacs("p cnf 1 1\n1 2 -3 4 0")


def test_parse_comments_multiline_and_percent():
    f = parse_dimacs("c hello\np cnf 3 2\n1 -2\n 3 0 -1 0\n%\n0\n")
    assert f.clauses == ((1, -2, 3), (-1,))


@pytest.mark.parametrize("text", ["1 0", "p cnf 1 1\n2 0", "p cnf 1 2\n1 0", "p cnf 1 1\n1", "p cnf x 1\n1 0"])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_dimacs(text)


def test_malformed():
    with pytest.raises(EmptyClause):
        CnfFormula(1, ((),))
    with pytest.raises(MalformedFormula):
        CnfFormula(1, ((2,),))


def test_eval_examples():
    taut = CnfFormula(1, ((1, -1),))
    contra = CnfFormula(1, ((1,), (-1,)))
    for v in all_assignments(1):
        assert eval_assignment(taut, v)
        assert not eval_assignment(contra, v)
    assert eval_assignment(CnfFormula(2, ((1, 2),)), (False, True))
    with pytest.raises(IncompleteAssignment):
        eval_assignment(taut, ())


def test_violated():
    f = CnfFormula(2, ((1,), (-1, 2), (-2,)))
    assert violated_clauses(f, (True, True)) == [2]
    assert violated_clauses(f, (True, False)) == [1]


def test_brute_force_examples():
    assert brute_force_sat(CnfFormula(1, ((1, -1),))) == (False,)
    assert brute_force_sat(CnfFormula(1, ((1,), (-1,)))) is None
    assert brute_force_sat(CnfFormula(2, ((1, 2), (-1, 2)))) == (False, True)


def test_brute_force_guard():
    with pytest.raises(TooManyVariables):
        brute_force_sat(CnfFormula(25, ((1,),)))


def test_order_is_counting_from_all_false():
    assert list(all_assignments(2)) == [(False, False), (False, True), (True, False), (True, True)]


def test_dimacs_round_trip():
    f = CnfFormula(3, ((1, -2, 3), (-1,), (2, 3)))
    assert parse_dimacs(format_dimacs(f)) == f
