"""Exception hierarchy.

Every domain error carries a stable ``code`` (the class name) which the CLI
reports in its ``{"error": code, "detail": ...}`` payload.
"""

from __future__ import annotations


class StringexError(Exception):
    """Base class for all domain errors raised by this package."""

    @property
    def code(self) -> str:
        return type(self).__name__


# core
class NotGeneralizedCartan(StringexError):
    pass


class NotSymmetrizable(StringexError):
    pass


class LengthMismatch(StringexError):
    pass


class LetterOutOfRange(StringexError):
    pass


class InvalidInstance(StringexError):
    """Malformed instance file (bad JSON, wrong field types, missing origins)."""


# diagram / exchange
class UnknownString(StringexError):
    pass


class IntegralityViolation(StringexError):
    """Internal: a summed doubled entry was odd. Never valid-input behaviour."""


class SymmetrizerCheckFailed(StringexError):
    """Internal: Diag(s') B is not skew-symmetric."""


class EntryOutOfRange(StringexError):
    pass


class NotSkewSymmetric(StringexError):
    pass


# mutation
class UnknownVertex(StringexError):
    pass


class DepthExceeded(StringexError):
    """The reddening search hit its depth bound without finding a sequence.

    This is *not* evidence that no reddening sequence exists.
    """


class SearchTooLarge(StringexError):
    pass


# moves
class NotAQuadrilateral(StringexError):
    pass


class PositionOutOfRange(StringexError):
    pass


class NotSameShuffleClass(StringexError):
    pass


class ReductionNotApplicable(StringexError):
    pass


# pprime
class LevelEmpty(StringexError):
    pass


class InternalLemmaViolation(StringexError):
    """Internal: a connection column was not sign-coherent."""


# oracle
class SameLevel(StringexError):
    pass
