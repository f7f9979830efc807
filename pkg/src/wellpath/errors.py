"""Exception types raised by the wellpath package.

Every error derives from :class:`WellPathError`, itself a ``ValueError``,
so callers can catch a single class when they do not care which check
failed.
"""


class WellPathError(ValueError):
    pass


# paths

class LengthMismatch(WellPathError):
    pass


class NotAPermutation(WellPathError):
    pass


class InvalidStep(WellPathError):
    pass


class StepLabelConflict(WellPathError):
    """A step contradicts the comparison of its two labels.

    ``index`` is 1-based: step ``i`` sits between labels ``i`` and ``i+1``.
    """

    def __init__(self, index, message=None):
        self.index = index
        super().__init__(message or f"step {index} conflicts with its labels")


# trees

class SizeMismatch(WellPathError):
    pass


class BadAddress(WellPathError):
    pass


class InvalidTree(WellPathError):
    pass


# matchings

class NotAnInvolution(WellPathError):
    pass


class FixedPoint(WellPathError):
    pass


class CoverageGap(WellPathError):
    pass


class BadRange(WellPathError):
    pass


# bijections

class NotMotzkin(WellPathError):
    pass


class NotPositive(WellPathError):
    pass


class SizeTooSmall(WellPathError):
    pass


class InconsistentMatching(WellPathError):
    pass


class NotInImageClass(WellPathError):
    pass


# counting / polytope

class DomainError(WellPathError):
    pass


class DimensionMismatch(WellPathError):
    pass
