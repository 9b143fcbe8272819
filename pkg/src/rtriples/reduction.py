"""3SAT -> rooted triples / 1-2-hypergraph construction.

Every variable x_i gets a gadget with two parallel chains from b_i b'_i to
b_{i+1} b'_{i+1}; walking the negative chain sets x_i true. Every clause
C_j gets one three-arc witness branch per literal, whose middle arc also
points into the matching variable chain. A source->dest path is acyclic
exactly when every chosen witness points at a chain the path skipped.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

from .errors import (EmptyClause, MalformedFormula, NotAWitnessPath, ParseError,
                     UnsatisfyingAssignment)
from .hypergraph import (HPath, Hyperarc, Hypergraph, PairNode, PathStatus, arc_of_triple,
                         format_hypergraph, parse_hypergraph, parse_node, validate_path)
from .sat import Assignment, CnfFormula, eval_assignment, literal_true
from .triples import Leaf, RootedTriple, format_triples, leaf_set, parse_triple, parse_triples

ALPHA, BETA, GAMMA = "alpha", "beta", "gamma"


def x_leaf(i: int, j: int, negative: bool = False) -> Leaf:
    return f"{'n' if negative else ''}x{i}_{j}"


def y_leaf(i: int, j: int, negative: bool = False) -> Leaf:
    return f"{'n' if negative else ''}y{i}_{j}"


def b_leaf(i: int) -> Leaf:
    return f"b{i}"


def bp_leaf(i: int) -> Leaf:
    return f"bp{i}"


def c_leaf(j: int) -> Leaf:
    return f"c{j}"


def d_leaf(j: int) -> Leaf:
    return f"d{j}"


def leaf_registry(n: int, m: int) -> dict[tuple, Leaf]:
    """Structured role -> leaf name, e.g. ``("nx", 2, 1) -> "nx2_1"``."""
    reg: dict[tuple, Leaf] = {}
    for i in range(1, n + 1):
        for j in range(1, m + 1):
            reg[("x", i, j)] = x_leaf(i, j)
            reg[("nx", i, j)] = x_leaf(i, j, True)
            reg[("y", i, j)] = y_leaf(i, j)
            reg[("ny", i, j)] = y_leaf(i, j, True)
    for i in range(1, n + 2):
        reg[("b", i)] = b_leaf(i)
        reg[("bp", i)] = bp_leaf(i)
    for j in range(1, m + 1):
        reg[("c", j)] = c_leaf(j)
        reg[("d", j)] = d_leaf(j)
    reg[("alpha",)] = ALPHA
    reg[("beta",)] = BETA
    reg[("gamma",)] = GAMMA
    reg[("c", m + 1)] = c_leaf(m + 1)
    return reg


def variable_side(i: int, m: int, negative: bool) -> list[RootedTriple]:
    """One chain of x_i's gadget, in path order (2m + 2 triples)."""
    z = [b_leaf(i), bp_leaf(i)]
    for j in range(1, m + 1):
        z += [x_leaf(i, j, negative), y_leaf(i, j, negative)]
    z += [b_leaf(i + 1), bp_leaf(i + 1)]
    side = [RootedTriple(z[k], z[k + 1], z[k + 2]) for k in range(len(z) - 2)]
    if negative:
        # the negative chain closes with x-bar_i^m b_{i+1} | b'_{i+1}
        side[-1] = RootedTriple(x_leaf(i, m, True), b_leaf(i + 1), bp_leaf(i + 1))
    return side


def variable_gadget(i: int, m: int) -> frozenset[RootedTriple]:
    return frozenset(variable_side(i, m, False) + variable_side(i, m, True))


def witness_branch(j: int, literal: int) -> list[RootedTriple]:
    """The three triples walking clause j's branch for ``literal``."""
    i, neg = abs(literal), literal < 0
    x, y = x_leaf(i, j, neg), y_leaf(i, j, neg)
    c = c_leaf(j)
    return [RootedTriple(c, d_leaf(j), x), RootedTriple(c, x, y), RootedTriple(c, y, c_leaf(j + 1))]


def clause_exit(j: int, m: int) -> RootedTriple:
    """The arc leaving clause j's gadget: into clause j+1, or to the destination for j = m."""
    if j < m:
        return RootedTriple(c_leaf(j), c_leaf(j + 1), d_leaf(j + 1))
    return RootedTriple(c_leaf(m), c_leaf(m + 1), GAMMA)


def dedup_clause(clause: Sequence[int]) -> tuple[int, ...]:
    return tuple(dict.fromkeys(clause))


def clause_gadget(j: int, clause: Sequence[int], m: int) -> frozenset[RootedTriple]:
    literals = dedup_clause(clause)
    if not literals:
        raise EmptyClause(f"clause {j} is empty")
    out = [t for lit in literals for t in witness_branch(j, lit)]
    if j < m:
        out.append(clause_exit(j, m))
    return frozenset(out)


def entry_triples() -> list[RootedTriple]:
    return [RootedTriple(ALPHA, BETA, b_leaf(1)), RootedTriple(BETA, b_leaf(1), bp_leaf(1))]


def bridge_triples(n: int) -> list[RootedTriple]:
    return [RootedTriple(b_leaf(n + 1), bp_leaf(n + 1), c_leaf(1)),
            RootedTriple(bp_leaf(n + 1), c_leaf(1), d_leaf(1))]


def connector_triples(n: int, m: int) -> frozenset[RootedTriple]:
    return frozenset(entry_triples() + bridge_triples(n) + [clause_exit(m, m)])


@dataclass(frozen=True, eq=True)
class ReductionInstance:
    formula: CnfFormula
    clauses: tuple[tuple[int, ...], ...]       # deduplicated literal appearances
    triples: frozenset[RootedTriple]
    hypergraph: Hypergraph
    source: PairNode
    dest: PairNode
    target: RootedTriple
    leaves: dict[tuple, Leaf] = field(hash=False)

    @property
    def n(self) -> int:
        return self.formula.n

    @property
    def m(self) -> int:
        return self.formula.m

    @property
    def single_literal_clauses(self) -> int:
        return sum(1 for c in self.clauses if len(c) == 1)

    def leaf_group_sizes(self) -> dict[str, int]:
        kinds = {"x": "L1", "nx": "L1", "y": "L1", "ny": "L1", "b": "L2", "bp": "L2",
                 "c": "L3", "d": "L3", "alpha": "L4", "beta": "L4", "gamma": "L4"}
        sizes = {"L1": 0, "L2": 0, "L3": 0, "L4": 0, "extra": 0}
        for role in self.leaves:
            if role == ("c", self.m + 1):
                sizes["extra"] += 1
            else:
                sizes[kinds[role[0]]] += 1
        return sizes


def reduce(formula: CnfFormula) -> ReductionInstance:
    n, m = formula.n, formula.m
    if n < 1 or m < 1:
        raise MalformedFormula("need at least one variable and one clause")
    clauses = tuple(dedup_clause(c) for c in formula.clauses)
    for j, clause in enumerate(clauses, start=1):
        if not 1 <= len(clause) <= 3:
            raise MalformedFormula(f"clause {j} has {len(clause)} distinct literals; 1-3 supported")
    triples: set[RootedTriple] = set(connector_triples(n, m))
    for i in range(1, n + 1):
        triples |= variable_gadget(i, m)
    for j, clause in enumerate(clauses, start=1):
        triples |= clause_gadget(j, clause, m)
    triples = frozenset(triples)
    return ReductionInstance(
        formula=formula,
        clauses=clauses,
        triples=triples,
        hypergraph=Hypergraph.from_triples(triples),
        source=PairNode(ALPHA, BETA),
        dest=PairNode(c_leaf(m + 1), GAMMA),
        target=RootedTriple(ALPHA, BETA, GAMMA),
        leaves=leaf_registry(n, m),
    )


def path_of_choices(inst: ReductionInstance, negative_sides: Sequence[bool],
                    witnesses: Sequence[int]) -> HPath:
    """The source->dest path taking the given variable chains and clause branches.

    ``witnesses[j-1]`` is the literal whose branch crosses clause j. The path
    need not be acyclic.
    """
    n, m = inst.n, inst.m
    if len(negative_sides) != n or len(witnesses) != m:
        raise ValueError("need one side per variable and one witness per clause")
    seq = entry_triples()
    for i, negative in enumerate(negative_sides, start=1):
        seq += variable_side(i, m, bool(negative))
    seq += bridge_triples(n)
    for j, lit in enumerate(witnesses, start=1):
        if lit not in inst.clauses[j - 1]:
            raise ValueError(f"literal {lit} does not appear in clause {j}")
        seq += witness_branch(j, lit)
        seq.append(clause_exit(j, m))
    return HPath(tuple(arc_of_triple(t) for t in seq), inst.source, inst.dest)


def path_of_assignment(inst: ReductionInstance, v: Assignment) -> HPath:
    """Acyclic witness path for a satisfying assignment.

    x_i true -> negative chain; each clause takes its first true literal.
    """
    v = tuple(bool(x) for x in v)
    if not eval_assignment(inst.formula, v):
        raise UnsatisfyingAssignment("assignment does not satisfy the formula")
    witnesses = [next(lit for lit in clause if literal_true(lit, v)) for clause in inst.clauses]
    return path_of_choices(inst, v, witnesses)


def forced_path(inst: ReductionInstance, v: Assignment, violated: int) -> HPath:
    """Path following ``v``'s chains but crossing clause ``violated`` (1-based) on a false literal.

    Other clauses take their first true literal when they have one.
    """
    v = tuple(bool(x) for x in v)
    clause = inst.clauses[violated - 1]
    if any(literal_true(lit, v) for lit in clause):
        raise ValueError(f"clause {violated} is satisfied by the assignment")
    witnesses = []
    for j, c in enumerate(inst.clauses, start=1):
        true_lits = [lit for lit in c if literal_true(lit, v)]
        witnesses.append(true_lits[0] if true_lits and j != violated else c[0])
    return path_of_choices(inst, v, witnesses)


def assignment_of_path(inst: ReductionInstance, path: HPath | Sequence[Hyperarc]) -> Assignment:
    """Read x_i = true off a path that walked x_i's negative chain."""
    arcs = tuple(path.arcs if isinstance(path, HPath) else path)
    if not arcs:
        raise NotAWitnessPath("empty path")
    if any(a not in inst.hypergraph.arcs for a in arcs):
        raise NotAWitnessPath("path uses arcs outside the instance")
    status = validate_path(inst.hypergraph, arcs)
    if status is not PathStatus.ACYCLIC:
        raise NotAWitnessPath(f"path is {status.value}, expected an acyclic path")
    if arcs[0].tail != inst.source or inst.dest not in arcs[-1].heads:
        raise NotAWitnessPath("path does not run from the source to the destination")
    used = set(arcs)
    v = []
    for i in range(1, inst.n + 1):
        pos = arc_of_triple(variable_side(i, inst.m, False)[0]) in used
        neg = arc_of_triple(variable_side(i, inst.m, True)[0]) in used
        if pos == neg:
            raise NotAWitnessPath(f"path does not cross variable {i}'s gadget on exactly one side")
        v.append(neg)
    return tuple(v)


def witness_subset(inst: ReductionInstance, v: Assignment) -> frozenset[RootedTriple]:
    return frozenset(path_of_assignment(inst, v).triples())


def path_length_formula(n: int, m: int) -> int:
    return n * (2 * m + 2) + 4 * m + 4


# -- instance bundle ---------------------------------------------------------

def _format_clauses(clauses: Sequence[Sequence[int]]) -> str:
    return ";".join(" ".join(map(str, c)) for c in clauses)


def instance_metadata(inst: ReductionInstance) -> dict[str, str]:
    sizes = inst.leaf_group_sizes()
    return {
        "n": str(inst.n),
        "m": str(inst.m),
        "clauses": _format_clauses(inst.formula.clauses),
        "source": str(inst.source),
        "dest": str(inst.dest),
        "target": str(inst.target),
        "triples": str(len(inst.triples)),
        "arcs": str(len(inst.hypergraph.arcs)),
        "nodes": str(len(inst.hypergraph.nodes)),
        "leaves": str(len(leaf_set(inst.triples))),
        "L1": str(sizes["L1"]),
        "L2": str(sizes["L2"]),
        "L3": str(sizes["L3"]),
        "L4": str(sizes["L4"]),
        "extra_leaves": str(sizes["extra"]),
        "single_literal_clauses": str(inst.single_literal_clauses),
        "witness_path_length": str(path_length_formula(inst.n, inst.m)),
    }


def format_metadata(meta: dict[str, str]) -> str:
    return "".join(f"{k}={v}\n" for k, v in meta.items())


def parse_metadata(text: str) -> dict[str, str]:
    meta = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise ParseError(f"expected key=value, got {line!r}", lineno)
        meta[key.strip()] = value.strip()
    return meta


def write_instance(inst: ReductionInstance, prefix: str | Path) -> list[Path]:
    """Write ``prefix.triples``, ``prefix.hg`` and ``prefix.meta``."""
    prefix = Path(prefix)
    paths = [prefix.with_name(prefix.name + ext) for ext in (".triples", ".hg", ".meta")]
    paths[0].write_text(format_triples(inst.triples))
    paths[1].write_text(format_hypergraph(inst.hypergraph))
    paths[2].write_text(format_metadata(instance_metadata(inst)))
    return paths


def read_instance(prefix: str | Path) -> ReductionInstance:
    prefix = Path(prefix)
    meta = parse_metadata(prefix.with_name(prefix.name + ".meta").read_text())
    try:
        n, m = int(meta["n"]), int(meta["m"])
        clauses = tuple(tuple(int(x) for x in c.split()) for c in meta["clauses"].split(";"))
        formula = CnfFormula(n, clauses)
        source, dest = parse_node(meta["source"]), parse_node(meta["dest"])
        target = parse_triple(meta["target"])
    except (KeyError, ValueError) as exc:
        raise ParseError(f"bad instance metadata: {exc}") from exc
    if len(clauses) != m:
        raise ParseError("metadata clause count disagrees with m")
    triples = parse_triples(prefix.with_name(prefix.name + ".triples").read_text())
    graph = parse_hypergraph(prefix.with_name(prefix.name + ".hg").read_text())
    return ReductionInstance(formula, tuple(dedup_clause(c) for c in clauses), triples, graph,
                             source, dest, target, leaf_registry(n, m))
