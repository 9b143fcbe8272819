"""Small CNF toolkit: DIMACS I/O, evaluation, and a brute-force oracle."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator, Sequence

from .errors import (ClauseTooLarge, EmptyClause, IncompleteAssignment, MalformedFormula,
                     ParseError, TooManyVariables)

MAX_CLAUSE_WIDTH = 3
MAX_BRUTE_FORCE_VARS = 24

# v[i - 1] is the value of x_i
Assignment = tuple[bool, ...]


@dataclass(frozen=True)
class CnfFormula:
    n: int
    clauses: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "clauses", tuple(tuple(c) for c in self.clauses))
        if self.n < 0:
            raise MalformedFormula("negative variable count")
        for clause in self.clauses:
            if not clause:
                raise EmptyClause("empty clause")
            for lit in clause:
                if lit == 0 or abs(lit) > self.n:
                    raise MalformedFormula(f"literal {lit} out of range for {self.n} variables")

    @property
    def m(self) -> int:
        return len(self.clauses)

    def __str__(self) -> str:
        def lit(x: int) -> str:
            return f"x{x}" if x > 0 else f"~x{-x}"
        return " & ".join("(" + " | ".join(lit(x) for x in c) + ")" for c in self.clauses)


def literal_true(lit: int, v: Assignment) -> bool:
    return v[abs(lit) - 1] == (lit > 0)


def eval_assignment(formula: CnfFormula, v: Sequence[bool]) -> bool:
    if len(v) != formula.n:
        raise IncompleteAssignment(f"assignment covers {len(v)} of {formula.n} variables")
    v = tuple(bool(x) for x in v)
    return all(any(literal_true(lit, v) for lit in clause) for clause in formula.clauses)


def violated_clauses(formula: CnfFormula, v: Assignment) -> list[int]:
    """0-based indices of clauses with no true literal."""
    return [j for j, clause in enumerate(formula.clauses)
            if not any(literal_true(lit, v) for lit in clause)]


def all_assignments(n: int) -> Iterator[Assignment]:
    """Binary counting order starting from all-false."""
    return product((False, True), repeat=n)


def brute_force_sat(formula: CnfFormula) -> Assignment | None:
    if formula.n > MAX_BRUTE_FORCE_VARS:
        raise TooManyVariables(f"{formula.n} variables exceeds the brute-force guard")
    for v in all_assignments(formula.n):
        if eval_assignment(formula, v):
            return v
    return None


def parse_dimacs(text: str) -> CnfFormula:
    header: tuple[int, int] | None = None
    clauses: list[tuple[int, ...]] = []
    current: list[int] = []
    current_line = 0
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("c"):
            continue
        if stripped.startswith("%"):
            break
        if stripped.startswith("p"):
            parts = stripped.split()
            if header is not None:
                raise ParseError("duplicate problem line", lineno)
            if len(parts) != 4 or parts[1] != "cnf":
                raise ParseError(f"bad problem line {stripped!r}", lineno)
            try:
                header = (int(parts[2]), int(parts[3]))
            except ValueError:
                raise ParseError(f"bad problem line {stripped!r}", lineno) from None
            if min(header) < 0:
                raise ParseError("negative counts in problem line", lineno)
            continue
        if header is None:
            raise ParseError("clause before problem line", lineno)
        for tok in stripped.split():
            try:
                lit = int(tok)
            except ValueError:
                raise ParseError(f"bad literal {tok!r}", lineno) from None
            if not current:
                current_line = lineno
            if lit == 0:
                if not current:
                    raise ParseError("empty clause", lineno)
                if len(current) > MAX_CLAUSE_WIDTH:
                    raise ClauseTooLarge(
                        f"clause has {len(current)} literals; at most {MAX_CLAUSE_WIDTH} supported",
                        current_line)
                for x in current:
                    if abs(x) > header[0]:
                        raise ParseError(f"literal {x} exceeds declared {header[0]} variables",
                                         current_line)
                clauses.append(tuple(current))
                current = []
                continue
            current.append(lit)
    if header is None:
        raise ParseError("missing problem line")
    if current:
        raise ParseError("last clause is not terminated by 0", current_line)
    if len(clauses) != header[1]:
        raise ParseError(f"header declares {header[1]} clauses, found {len(clauses)}")
    return CnfFormula(header[0], tuple(clauses))


def format_dimacs(formula: CnfFormula) -> str:
    lines = [f"p cnf {formula.n} {formula.m}"]
    lines += [" ".join(map(str, clause)) + " 0" for clause in formula.clauses]
    return "\n".join(lines) + "\n"
