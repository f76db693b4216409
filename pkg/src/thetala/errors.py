"""Exception types shared across the package."""

from __future__ import annotations


class ThetaLAError(Exception):
    """Base class for all package errors."""


class SpecError(ThetaLAError, ValueError):
    """A graph or construction parameter is out of range."""


class SimplicityViolation(SpecError):
    """A merge or spec would create a loop or a parallel edge."""


class LengthMismatch(SpecError):
    """Sequence lengths do not fit the requested operation."""


class MissingLabel(ThetaLAError):
    """A labeling does not cover every edge of the graph."""


class PatternViolation(ThetaLAError):
    """A base labeling does not have the edge pattern a transformation needs."""


class InvalidBase(ThetaLAError):
    """A base labeling handed to a transformation is not local antimagic."""


class StructureViolation(ThetaLAError):
    """A labeling lacks the induced-color structure a transformation needs."""


class BudgetExceeded(ThetaLAError):
    """The exact search hit its edge, node or time budget."""


class NotFound(ThetaLAError):
    """An exhaustive search finished without finding a labeling."""


class ParseError(ThetaLAError, ValueError):
    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column
