"""Exception types raised by the library."""


class PartpermError(Exception):
    """Base class for all library errors."""


class MissingPartOne(PartpermError, ValueError):
    pass


class DomainTooLarge(PartpermError, ValueError):
    """A ground set does not fit inside {1, ..., n}."""


class NotInvariant(PartpermError, ValueError):
    pass


class WeightExceedsN(PartpermError, ValueError):
    pass


class WeightMismatch(PartpermError, ValueError):
    pass


class IndexExceedsN(PartpermError, ValueError):
    pass


class EmptyPartition(PartpermError, ValueError):
    pass


class NonInvertibleSeries(PartpermError, ZeroDivisionError):
    pass


class OrderExceeded(PartpermError, IndexError):
    pass


class InternalMismatch(PartpermError, AssertionError):
    """Two independent computation routes disagreed."""


class NonIntegerResult(PartpermError, ArithmeticError):
    pass
