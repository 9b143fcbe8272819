"""Rooted-triple consistency and entailment, 1-2 directed hypergraphs, and a
3SAT reduction tying acyclic hyperpaths to triple entailment."""

from .consistency import (Ahograph, Consistent, Inconsistent, ahograph, build,
                          closure_consistent, dyadic_apply, entails_consistent, is_consistent)
from .errors import *  # noqa: F401,F403
from .hypergraph import (HPath, Hyperarc, Hypergraph, NamedNode, PairNode, PathStatus,
                         amplification_sizes, amplify, arc, arc_of_triple, b_connected_set,
                         find_acyclic_path, format_hypergraph, is_cyclic_arcset,
                         min_acyclic_path, parse_hypergraph, triple_of_arc, validate_path)
from .inconsistent import closure_inconsistent, entails_inconsistent, maximal_consistent_subsets
from .reduction import ReductionInstance, path_of_assignment, read_instance, reduce, write_instance
from .sat import CnfFormula, brute_force_sat, eval_assignment, format_dimacs, parse_dimacs
from .trees import RootedTree, displayed_triples, enumerate_binary_trees, parse_newick
from .triples import RootedTriple, format_triples, parse_triple, parse_triples, triple_set
from .verify import ChainReport, LemmaReport, check_chain, check_lemma_suite

__version__ = "0.1.0"
