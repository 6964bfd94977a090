"""Exception types raised across the package."""


class LatticeSyncError(ValueError):
    """Base class for every error raised by latticesync."""


class SpecError(LatticeSyncError):
    """A graph description violates the validity domain."""


class InvalidOverhead(SpecError):
    pass


class BadDimensionCount(SpecError):
    pass


class DegenerateSize(SpecError):
    pass


class IndexOutOfRange(LatticeSyncError):
    pass


class DimensionMismatch(LatticeSyncError):
    pass


class NotSymmetric(LatticeSyncError):
    pass


class NonConvergence(LatticeSyncError):
    pass


class TooLarge(LatticeSyncError):
    pass


class MixedParity(LatticeSyncError):
    pass
