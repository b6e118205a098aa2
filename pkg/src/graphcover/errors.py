"""Exception hierarchy.

Every error raised on bad user input derives from :class:`InvalidInput`, so
the CLI can map it to exit code 2. :class:`IsomorphismFailure` is different:
it means a construction that is guaranteed to succeed did not, i.e. a bug.
"""


class GraphCoverError(Exception):
    pass


class InvalidInput(GraphCoverError, ValueError):
    pass


class InvalidGraph(InvalidInput):
    """Raised by graph validation; ``violations`` lists every problem found."""

    def __init__(self, message, violations=()):
        super().__init__(message)
        self.violations = list(violations) or [message]


class DuplicateId(InvalidGraph):
    pass


class DanglingEndpoint(InvalidGraph):
    pass


class InvalidId(InvalidGraph):
    pass


class UnknownVertex(InvalidInput):
    pass


class UnknownEdge(InvalidInput):
    pass


class NotComposable(InvalidInput):
    pass


class EndpointMismatch(InvalidInput):
    pass


class NotConnected(InvalidInput):
    pass


class GeneratorMismatch(InvalidInput):
    pass


class NotAGroup(InvalidInput):
    pass


class NotASubgroup(InvalidInput):
    pass


class InfiniteIndex(InvalidInput):
    pass


class GroupMismatch(InvalidInput):
    pass


class NotAMorphism(InvalidInput):
    def __init__(self, message, edge=None):
        super().__init__(message)
        self.edge = edge


class NotACovering(InvalidInput):
    pass


class AnchorMismatch(InvalidInput):
    pass


class BasePointMismatch(InvalidInput):
    pass


class NotInFiber(InvalidInput):
    pass


class NotAnAction(InvalidInput):
    pass


class NotFree(InvalidInput):
    pass


class NotCohomologous(InvalidInput):
    pass


class IsomorphismFailure(GraphCoverError, RuntimeError):
    pass
