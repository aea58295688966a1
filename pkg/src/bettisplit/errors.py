"""Exception hierarchy shared by the library and the command line."""

from __future__ import annotations


class BettiSplitError(Exception):
    """Base class for all library errors."""


class MalformedInputError(BettiSplitError, ValueError):
    """Input text, exponent vector or facet list could not be interpreted."""


class AmbientMismatchError(BettiSplitError, ValueError):
    """Two objects live in polynomial rings with different numbers of variables."""


class PreconditionError(BettiSplitError, ValueError):
    """An operation was called outside its domain (distinct from a negative verdict)."""


class NotEquigeneratedError(PreconditionError):
    """A linear-resolution test was requested for an ideal with mixed generator degrees."""


class DegenerateSplitError(PreconditionError):
    """A requested split leaves one of the two parts without generators."""


class DegenerateComplexError(PreconditionError):
    """A simplicial complex has no usable Alexander dual (void, or a facet is the whole vertex set)."""


class HypothesisError(PreconditionError):
    """Parameters violate the hypotheses of a splitting theorem."""


class ConstructionFailure(HypothesisError):
    """The split construction produced generators that are not minimal generators of the ideal."""

    def __init__(self, message: str, offending=()):
        super().__init__(message)
        self.offending = tuple(offending)


class UndefinedError(BettiSplitError, ValueError):
    """A quantity is undefined for the given input (e.g. regularity of the zero ideal)."""


class ResourceLimitError(BettiSplitError, RuntimeError):
    """A configured size cap was exceeded."""
