"""Exception hierarchy shared by every module."""

from __future__ import annotations


class RTriplesError(Exception):
    """Base class for all errors raised by this package."""


class ResourceLimitError(RTriplesError):
    """A size guard or search budget was exceeded (CLI exit code 3)."""


# -- triples -----------------------------------------------------------------

class DuplicateLeaf(RTriplesError, ValueError):
    pass


class InvalidLeafName(RTriplesError, ValueError):
    pass


class UnknownLeaf(RTriplesError, LookupError):
    pass


class EmptyLeafSet(RTriplesError, ValueError):
    pass


class InconsistentInput(RTriplesError, ValueError):
    pass


class UniverseTooLarge(ResourceLimitError):
    pass


class SetTooLarge(ResourceLimitError):
    pass


class TreeError(RTriplesError, ValueError):
    """Malformed tree structure or Newick text."""


# -- hypergraph --------------------------------------------------------------

class MalformedArc(RTriplesError, ValueError):
    pass


class UnknownNode(RTriplesError, LookupError):
    pass


class ArcNotInGraph(RTriplesError, LookupError):
    pass


class ResourceExhausted(ResourceLimitError):
    """A path search hit its expansion budget before finishing."""


class BudgetExceeded(ResourceLimitError):
    pass


# -- sat / reduction ---------------------------------------------------------

class ParseError(RTriplesError, ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ClauseTooLarge(ParseError):
    pass


class IncompleteAssignment(RTriplesError, ValueError):
    pass


class TooManyVariables(ResourceLimitError):
    pass


class MalformedFormula(RTriplesError, ValueError):
    pass


class EmptyClause(MalformedFormula):
    pass


class UnsatisfyingAssignment(RTriplesError, ValueError):
    pass


class NotAWitnessPath(RTriplesError, ValueError):
    pass
