"""Exception hierarchy shared by every module."""


class ToricError(Exception):
    """Base class for all library errors."""


class ValidationError(ToricError, ValueError):
    """Malformed input: bad JSON, unknown labels, broken invariants."""


class UnknownVertex(ValidationError, KeyError):
    pass


class GraphMismatch(ToricError):
    pass


class VertexSetMismatch(ToricError):
    pass


class LabelCollision(ValidationError):
    pass


class CapExceeded(ToricError):
    """An exhaustive enumeration would exceed the configured vertex cap."""


class NotAcyclic(ToricError):
    pass


class NotASource(ToricError):
    pass


class NotAFilter(ToricError):
    pass


class NotAQuotientPartition(ToricError):
    pass


class IllDefinedQuotient(ToricError):
    pass


class AmbiguousClosure(ToricError):
    pass


class MissingCoordinate(ValidationError):
    pass


class NotAPermutation(ValidationError):
    pass


class ReconciliationFailure(ToricError):
    def __init__(self, message, witnesses=()):
        super().__init__(message)
        self.witnesses = list(witnesses)


class ConsistencyError(ToricError, AssertionError):
    """Two independent computations of the same quantity disagreed."""
