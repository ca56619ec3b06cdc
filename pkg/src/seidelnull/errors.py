"""Exception types raised across the package."""


class SeidelError(Exception):
    """Base class for all errors raised by seidelnull."""


class OrderError(SeidelError, ValueError):
    """A graph order or family index is outside the supported range."""


class Graph6Error(SeidelError, ValueError):
    """Malformed graph6 input. ``offset`` is the byte position of the fault."""

    def __init__(self, message, offset=None):
        self.offset = offset
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)


class NullityError(SeidelError, ArithmeticError):
    """Kernel has dimension > 1, so there is no canonical primitive vector."""


class NoWitness(SeidelError):
    """The kernel vector is not a +-1 vector, so no regular switching exists."""


class NotApplicable(SeidelError):
    """The hypotheses of a check do not hold for the given input."""
