"""Exception types shared across the package."""


class GraphBraidError(Exception):
    """Base class for all domain errors raised by this package."""


class GraphFormatError(GraphBraidError):
    """Malformed graph input: bad JSON, loops, duplicate edges, bad indices."""


class DisconnectedGraphError(GraphBraidError):
    """An operation requiring a connected graph received a disconnected one."""


class InsufficientSubdivisionError(GraphBraidError):
    """Graph fails the subdivision conditions required for the strand count."""

    def __init__(self, message, violations=None):
        super().__init__(message)
        self.violations = violations or []


class EmptyComplexError(GraphBraidError):
    """Strand count exceeds the number of vertices: no configurations exist."""


class WordFormatError(GraphBraidError):
    """Malformed word text or a generator index out of range."""


class MatchingValidationError(GraphBraidError):
    """A constructed Morse matching violated one of its defining conditions."""


class CrossCheckError(GraphBraidError):
    """A classification verdict disagreed with the homology oracle."""


class EmbeddingVerificationError(GraphBraidError):
    """A commutation check of an embedding failed; carries the full report."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report
