import itertools

from rtriples.consistency import build, dyadic_apply
from rtriples.inconsistent import entails_inconsistent
from rtriples.reduction import reduce
from rtriples.sat import CnfFormula
from rtriples.triples import leaf_set
from rtriples.verify import (ChainReport, check_chain, check_lemma_suite, format_reports,
                             parse_reports)

TAUT = CnfFormula(1, ((1, -1),))
CONTRA = CnfFormula(1, ((1,), (-1,)))


def test_chain_tautology():
    r = check_chain(TAUT)
    assert (r.sat, r.path_exists, r.entailed, r.agreement) == (True, True, True, True)
    assert r.path_length == 12


def test_chain_contradiction():
    r = check_chain(CONTRA, entailment_budget=24)
    assert (r.sat, r.path_exists) == (False, False)
    assert r.entailed is False
    assert r.agreement


def test_chain_over_budget():
    r = check_chain(CONTRA, entailment_budget=10)
    assert r.entailed is None
    assert r.agreement
    assert "entailment" not in r.timings


def test_agreement_rule():
    base = dict(formula_id="f", sat=True, path_exists=True, entailed=None)
    assert ChainReport(**base).agreement
    assert not ChainReport(**{**base, "entailed": False}).agreement
    assert not ChainReport(**{**base, "path_exists": False}).agreement


def _dyadic_fixpoint(triples):
    known = set(triples)
    while True:
        new = set()
        for t1, t2 in itertools.combinations(sorted(known), 2):
            new |= dyadic_apply(t1, t2)
        if new <= known:
            return known
        known |= new


def test_side_entry_subset_entails_target_without_a_path():
    """(x1) & (~x1) has no acyclic path yet a consistent subset of R entails the target.

    Checked twice without the subset search: BUILD displays the witness, and
    plain dyadic forward chaining derives the target from it.
    """
    inst = reduce(CONTRA)
    res = entails_inconsistent(inst.triples, inst.target, max_size=24)
    assert res.entailed
    witness = res.witness
    tree = build(witness, leaf_set(witness)).tree
    assert all(tree.displays(t) for t in witness)
    assert inst.target in _dyadic_fixpoint(witness)


def test_lemma_suite_tautology():
    rep = check_lemma_suite(reduce(TAUT))
    assert rep.passed and not rep.vacuous
    assert sum(c.name == "witness_entails" for c in rep.checks) == 2


def test_lemma_suite_contradiction():
    rep = check_lemma_suite(reduce(CONTRA))
    assert rep.passed
    names = {c.name for c in rep.checks}
    assert names == {"forced_cyclic", "forced_inconsistent"}


def test_report_format_is_stable():
    reps = [check_chain(TAUT, formula_id="a"), check_lemma_suite(reduce(CONTRA))]
    text = format_reports(reps)
    blocks = parse_reports(text)
    assert len(blocks) == 2
    assert list(blocks[0])[:5] == ["formula", "sat", "path_exists", "entailed", "agreement"]
    assert blocks[0]["agreement"] == "true"
    assert blocks[1]["status"] == "pass"
