"""Exception hierarchy.

``InputError`` covers anything wrong with what the caller handed in (exit code 1 on the
command line); ``DomainError`` covers inputs that are well formed but outside what the
analysis supports, or internal consistency failures (exit code 2).
"""


class ConsensusBoundsError(Exception):
    """Root of every error raised by this package."""


class InputError(ConsensusBoundsError, ValueError):
    pass


class DomainError(ConsensusBoundsError):
    pass


class ParseError(InputError):
    pass


class ValidationError(InputError):
    pass


class InvalidNodeCountError(ValidationError):
    pass


class SelfLoopError(ValidationError):
    pass


class DuplicateEdgeError(ValidationError):
    pass


class NodeOutOfRangeError(ValidationError):
    pass


class LeaderOutOfRangeError(ValidationError):
    pass


class DuplicateLeaderError(ValidationError):
    pass


class EmptyLeaderSetError(ValidationError):
    pass


class InvalidParamsError(InputError):
    pass


class InvalidScheduleError(InputError):
    pass


class DimensionMismatchError(DomainError, ValueError):
    pass


class NotSquareError(DimensionMismatchError):
    pass


class DisconnectedError(DomainError):
    def __init__(self, message: str = "graph is not connected"):
        super().__init__(message)


class ConnectivityRetriesExceededError(DomainError):
    pass


class TooLargeError(DomainError):
    pass


class InvalidPartitionError(DomainError):
    pass


class InvalidSequenceError(DomainError):
    pass


class UnstableStepError(DomainError):
    pass


class SandwichViolationError(DomainError):
    """Raised when |D*| <= rank <= |pi*| fails. Always an implementation bug."""
