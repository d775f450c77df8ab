"""
Exception hierarchy shared by every package of the splitting toolkit.
"""


class TubularError(Exception):
    """Base class for all errors raised by the library."""


class GraphError(TubularError):
    """A graph has a loop, a parallel edge or an unknown vertex."""


class MalformedComplexError(TubularError):
    """Indices of a complex are out of range or inconsistent."""

    def __init__(self, position: str, message: str):
        self.position = position
        self.message = message
        super().__init__(f"{position}: {message}")


class ValidationError(TubularError):
    """A complex fails validation where a valid one is required."""

    def __init__(self, report):
        self.report = report
        super().__init__(f"invalid complex: {report.summary()}")


class DocumentError(TubularError):
    """A complex document does not match the schema."""

    def __init__(self, pointer: str, message: str):
        self.pointer = pointer
        super().__init__(f"{pointer or '/'}: {message}")


class MoveError(TubularError):
    """A simplification move was asked to do something inconsistent."""


class DecompositionError(TubularError):
    """The normalization loop or the cutting recursion exceeded its limits."""


class WordError(TubularError):
    """A word is malformed or trivial."""


class OracleInconclusiveError(TubularError):
    """The Whitehead oracle could not reach a conclusive minimum."""
