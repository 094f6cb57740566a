"""Exception hierarchy shared by every module of the package."""


class FlameError(Exception):
    """Base class for all errors raised by vertexflame."""


class DigraphError(FlameError, ValueError):
    """A rooted digraph or path violates a structural invariant."""


class DuplicateEdge(DigraphError):
    pass


class DuplicateVertex(DigraphError):
    pass


class LoopEdge(DigraphError):
    pass


class RootHasInEdge(DigraphError):
    pass


class UnknownEndpoint(DigraphError):
    pass


class EdgeNotIngoing(DigraphError):
    pass


class RootInSet(DigraphError):
    pass


class NotAPath(DigraphError):
    pass


class ModeViolation(DigraphError):
    """A path system breaks the disjointness mode it declares."""


class TrivialPathError(DigraphError):
    """Edge views were requested on a system containing a trivial path."""


class PreconditionViolated(FlameError, ValueError):
    pass


class NotAnEMSeparation(PreconditionViolated):
    pass


class ChainConditionViolated(PreconditionViolated):
    def __init__(self, index, message=None):
        self.index = index
        super().__init__(message or f"chain condition fails at index {index}")


class NotDisjoint(PreconditionViolated):
    pass


class NotXYPaths(PreconditionViolated):
    pass


class NotInG(PreconditionViolated):
    pass


class NotSpanning(PreconditionViolated):
    pass


class NotLarge(PreconditionViolated):
    pass


class NotAFlame(PreconditionViolated):
    pass


class LedgerNotInG(FlameError, RuntimeError):
    """Protected in-edges of a vertex cannot be realised by a path system."""


class InvariantError(FlameError, AssertionError):
    """An internal postcondition failed; this always indicates a bug."""


class TooLarge(FlameError, ValueError):
    """An exponential-time oracle was asked to handle an oversized input."""


class HypothesisViolated(FlameError, ValueError):
    pass


class ParseError(FlameError, ValueError):
    def __init__(self, message, line=None, offset=None):
        self.line = line
        self.offset = offset
        where = ""
        if line is not None:
            where = f" (line {line}"
            where += f", offset {offset})" if offset is not None else ")"
        elif offset is not None:
            where = f" (offset {offset})"
        super().__init__(message + where)
