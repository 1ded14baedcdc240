"""Exception hierarchy shared by all hopdom modules."""


class HopdomError(Exception):
    """Base class for all errors raised by this package."""


class GraphError(HopdomError):
    """Invalid graph construction input."""


class SelfLoopError(GraphError):
    pass


class DuplicateEdgeError(GraphError):
    pass


class VertexOutOfRangeError(GraphError):
    pass


class BadParamsError(HopdomError):
    """Invalid parameters for a graph generator or a command."""


class OracleLimitExceededError(HopdomError):
    """Instance is larger than the configured exhaustive-enumeration cap."""


class NodeLimitExceededError(HopdomError):
    """Branch-and-bound ran out of its node budget (resource exhaustion,
    distinct from a proof of infeasibility)."""


class DimensionMismatchError(HopdomError):
    """Probability vector length does not match the vertex count."""


class HypothesisViolatedError(HopdomError):
    """A formula was requested outside its stated hypotheses."""


class ParseError(HopdomError):
    """Malformed input file; carries the offending 1-based line number."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class InternalError(HopdomError):
    """A post-hoc self-check failed; indicates a bug, not bad input."""
