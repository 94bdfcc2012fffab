"""
Exception hierarchy for symdeform.

All library errors derive from SymDeformError so that callers (and the CLI)
can catch them in one place.
"""

from typing import Optional


class SymDeformError(Exception):
    """Base error for symdeform."""

    pass


class InputError(SymDeformError, ValueError):
    """Invalid argument, dimension mismatch or missing value."""

    pass


class SizeError(InputError):
    """Invalid matrix or block size."""

    pass


class ParseError(InputError):
    """Text or file could not be parsed."""

    def __init__(self, message: str, position: Optional[object] = None):
        self.position = position
        if position is not None:
            message = f"{message} (at {position})"
        super().__init__(message)


class InvariantError(SymDeformError, ValueError):
    """A value violates a structural invariant (e.g. a non-symmetric pair)."""

    pass


class PreconditionError(SymDeformError):
    """An operation was called outside its precondition."""

    pass


class InternalError(SymDeformError, RuntimeError):
    """A state that cannot occur when preconditions hold."""

    pass
