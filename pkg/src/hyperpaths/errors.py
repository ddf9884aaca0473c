"""Exception types shared across the package."""

from __future__ import annotations


class HypergraphError(ValueError):
    """Base class for malformed-input errors.

    ``index`` is the offending arc-spec position when one applies; parsers
    attach ``line`` (1-based) so messages can point into the source file.
    """

    def __init__(self, message: str, index: int | None = None, line: int | None = None):
        super().__init__(message)
        self.index = index
        self.line = line

    def __str__(self) -> str:
        msg = super().__str__()
        if self.line is not None:
            return f"line {self.line}: {msg}"
        return msg


class DisjointnessViolation(HypergraphError):
    pass


class UnknownVertex(HypergraphError):
    pass


class EmptySide(HypergraphError):
    pass


class InvalidVertexName(HypergraphError):
    pass


class UnknownArcId(HypergraphError):
    pass


class ParseError(HypergraphError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        super().__init__(message, line=line)
        self.column = column

    def __str__(self) -> str:
        msg = ValueError.__str__(self)
        if self.line is not None and self.column is not None:
            return f"line {self.line}, column {self.column}: {msg}"
        if self.line is not None:
            return f"line {self.line}: {msg}"
        return msg


class NotThreeCnf(ParseError):
    pass


class HeaderMismatch(ParseError):
    pass


class NotBHypergraph(HypergraphError):
    pass


class NotConnected(Exception):
    """No S-T hyperpath exists in the given instance."""


class NotLayerable(Exception):
    def __init__(self, unplaced):
        self.unplaced = frozenset(unplaced)
        super().__init__(f"arcs {sorted(self.unplaced)} cannot be placed in any layer")


class HeadInSources(HypergraphError):
    pass


class CapExceeded(Exception):
    pass


class EmptyEdge(HypergraphError):
    pass


class MalformedCnf(HypergraphError):
    pass


class SeedSolution(ValueError):
    """Raised when a solution from the reduction's seed family is supplied."""


class SeedPath(SeedSolution):
    pass


class SeedSeparator(SeedSolution):
    pass


class NotInducedPath(ValueError):
    pass


class NotSeparator(ValueError):
    pass


class MissingFinalArc(ValueError):
    pass


class ForeignArc(ValueError):
    pass


class UnsatisfiedAssignment(AssertionError):
    """An extracted assignment fails to satisfy its formula."""
