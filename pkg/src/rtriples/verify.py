"""Check the sat / acyclic path / entailment equivalence on concrete formulas.

Reports are plain data: disagreements are recorded, never raised.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .consistency import entails_consistent, is_consistent
from .hypergraph import PathStatus, find_acyclic_path, validate_path
from .inconsistent import MAX_SUBSET_SEARCH, entails_inconsistent
from .reduction import (ReductionInstance, assignment_of_path, forced_path, path_of_assignment,
                        reduce)
from .sat import CnfFormula, all_assignments, brute_force_sat, eval_assignment, violated_clauses


@dataclass
class ChainReport:
    formula_id: str
    sat: bool
    path_exists: bool
    entailed: bool | None
    witness_size: int | None = None
    path_length: int | None = None
    timings: dict[str, float] = field(default_factory=dict)

    @property
    def agreement(self) -> bool:
        return self.sat == self.path_exists and (self.entailed is None or self.entailed == self.sat)

    def as_dict(self) -> dict[str, str]:
        def fmt(x: object) -> str:
            if x is None:
                return "none"
            if isinstance(x, bool):
                return "true" if x else "false"
            return str(x)

        out = {
            "formula": self.formula_id,
            "sat": fmt(self.sat),
            "path_exists": fmt(self.path_exists),
            "entailed": fmt(self.entailed),
            "agreement": fmt(self.agreement),
            "path_length": fmt(self.path_length),
            "witness_size": fmt(self.witness_size),
        }
        for stage in ("reduce", "path", "sat", "entailment"):
            if stage in self.timings:
                out[f"time_{stage}"] = f"{self.timings[stage]:.6f}"
        return out


def check_chain(formula: CnfFormula, entailment_budget: int = MAX_SUBSET_SEARCH,
                formula_id: str | None = None) -> ChainReport:
    """Run every leg independently; entailment is skipped when |R| exceeds the budget."""
    timings = {}
    t0 = time.perf_counter()
    inst = reduce(formula)
    timings["reduce"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    path = find_acyclic_path(inst.hypergraph, inst.source, inst.dest)
    timings["path"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    sat = brute_force_sat(formula) is not None
    timings["sat"] = time.perf_counter() - t0

    entailed = witness_size = None
    if len(inst.triples) <= entailment_budget:
        t0 = time.perf_counter()
        result = entails_inconsistent(inst.triples, inst.target, max_size=entailment_budget)
        timings["entailment"] = time.perf_counter() - t0
        entailed = result.entailed
        witness_size = None if result.witness is None else len(result.witness)

    return ChainReport(
        formula_id=formula_id or str(formula),
        sat=sat,
        path_exists=path is not None,
        entailed=entailed,
        witness_size=witness_size,
        path_length=None if path is None else len(path),
        timings=timings,
    )


def _check_chain_star(args: tuple) -> ChainReport:
    return check_chain(*args)


def check_many(formulas: Sequence[CnfFormula], entailment_budget: int = MAX_SUBSET_SEARCH,
               jobs: int = 1) -> list[ChainReport]:
    args = [(f, entailment_budget) for f in formulas]
    if jobs <= 1:
        return [check_chain(*a) for a in args]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_check_chain_star, args))


@dataclass
class LemmaCheck:
    name: str
    passed: bool
    detail: str


@dataclass
class LemmaReport:
    formula_id: str
    checks: list[LemmaCheck] = field(default_factory=list)

    @property
    def vacuous(self) -> bool:
        return not self.checks

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def as_dict(self) -> dict[str, str]:
        out = {
            "formula": self.formula_id,
            "checks": str(len(self.checks)),
            "failed": str(sum(not c.passed for c in self.checks)),
            "status": "vacuous" if self.vacuous else ("pass" if self.passed else "fail"),
        }
        for k, c in enumerate(self.checks, start=1):
            out[f"check_{k}"] = f"{c.name} {'pass' if c.passed else 'fail'} {c.detail}"
        return out


def _fmt_assignment(v: Sequence[bool]) -> str:
    return "".join("1" if x else "0" for x in v)


def check_lemma_suite(inst: ReductionInstance) -> LemmaReport:
    """Per-assignment checks of the witness-path lemmas.

    Satisfying assignments: the witness path is acyclic, its triples are
    consistent and entail the target, and reading the path back recovers the
    assignment. Falsifying assignments, once per violated clause: crossing
    that clause on a false literal gives a cyclic path with inconsistent triples.
    """
    report = LemmaReport(str(inst.formula))
    for v in all_assignments(inst.n):
        tag = _fmt_assignment(v)
        if eval_assignment(inst.formula, v):
            path = path_of_assignment(inst, v)
            triples = path.triples()
            status = validate_path(inst.hypergraph, path.arcs)
            consistent = is_consistent(triples)
            report.checks.append(LemmaCheck(
                "witness_acyclic", status is PathStatus.ACYCLIC, f"v={tag} status={status.value}"))
            report.checks.append(LemmaCheck("witness_consistent", consistent, f"v={tag}"))
            report.checks.append(LemmaCheck(
                "witness_entails", consistent and entails_consistent(triples, inst.target), f"v={tag}"))
            report.checks.append(LemmaCheck(
                "witness_round_trip", assignment_of_path(inst, path) == tuple(v), f"v={tag}"))
        else:
            for j in violated_clauses(inst.formula, v):
                path = forced_path(inst, v, j + 1)
                status = validate_path(inst.hypergraph, path.arcs)
                report.checks.append(LemmaCheck(
                    "forced_cyclic", status is PathStatus.CYCLIC,
                    f"v={tag} clause={j + 1} status={status.value}"))
                report.checks.append(LemmaCheck(
                    "forced_inconsistent", not is_consistent(path.triples()),
                    f"v={tag} clause={j + 1}"))
    return report


def format_reports(reports: Iterable[ChainReport | LemmaReport]) -> str:
    """key=value blocks separated by blank lines."""
    blocks = []
    for r in reports:
        blocks.append("".join(f"{k}={v}\n" for k, v in r.as_dict().items()))
    return "\n".join(blocks)


def parse_reports(text: str) -> list[dict[str, str]]:
    out = []
    for block in text.strip().split("\n\n"):
        if not block.strip():
            continue
        entry = {}
        for line in block.splitlines():
            key, _, value = line.partition("=")
            entry[key] = value
        out.append(entry)
    return out
