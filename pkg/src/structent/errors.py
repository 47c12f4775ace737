"""Exception hierarchy shared by every module.

The CLI maps these onto process exit codes, so new error conditions
should subclass one of the existing categories rather than invent a
parallel hierarchy.
"""

from __future__ import annotations


class StructentError(Exception):
    """Base class for all library errors."""


class ParseError(StructentError):
    """Malformed input file. Carries the 1-based line number when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class UnknownVertexError(StructentError):
    """A vertex label was requested that the graph does not contain."""


class DegenerateGraphError(StructentError):
    """The requested measure is undefined on this input.

    Examples: degree entropy of an edgeless graph, betweenness entropy
    when no shortest path has an interior vertex, loss analysis on a
    graph with fewer than three vertices.
    """


class InvalidDistributionError(StructentError):
    """A probability vector does not sum to 1 or has negative entries."""


class InvalidPartitionError(StructentError):
    """Cells overlap or fail to cover the vertex set."""


class SizeLimitError(StructentError):
    """Input exceeds the hard size bound of an exhaustive algorithm."""


class OverflowLimitError(StructentError):
    """A path count exceeded the unsigned 64-bit range.

    Counts grow combinatorially on some graph families; the engine
    detects the overflow instead of silently wrapping.
    """


class MissingKindError(StructentError):
    """A loss table was asked to rank a measure it never computed."""


class VerificationError(StructentError):
    """Dataset verification found a mismatch against registered values."""
