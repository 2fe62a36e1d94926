"""Exception types raised across the package.

All of them derive from ``ValueError`` so callers that only care about bad
input can catch one thing.
"""


class SkewSchurError(ValueError):
    """Base class for every error raised by this package."""


class ParseError(SkewSchurError):
    pass


class SizeMismatch(SkewSchurError):
    pass


class NotComparable(SkewSchurError):
    pass


class DoesNotFit(SkewSchurError):
    pass


class NotContained(SkewSchurError):
    pass


class NotBasic(SkewSchurError):
    pass


class NotRibbon(SkewSchurError):
    pass


class EmptySubset(SkewSchurError):
    pass


class LengthExceeded(SkewSchurError):
    pass


class HypothesisViolated(SkewSchurError):
    """Raised when a closed-form criterion is asked about a shape outside its scope."""


class OutOfRange(SkewSchurError):
    pass
