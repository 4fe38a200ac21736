"""
Exceptions raised by tropgon
"""


class TropgonError(Exception):
    """Base class for every error raised by the package."""


class PreconditionError(TropgonError, ValueError):
    """An operation was called outside its documented hypotheses."""


class DegenerateInputError(PreconditionError):
    """The input has too small a dimension for the requested operation."""


class CapExceededError(TropgonError):
    """An exhaustive search was refused because a configured cap is exceeded."""


class InputFormatError(TropgonError, ValueError):
    """Malformed JSON input."""


class FalsificationError(TropgonError):
    """A theorem-level check failed on a concrete object."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness
