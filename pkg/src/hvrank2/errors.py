"""Exception hierarchy shared by every module of the package."""


class HVError(Exception):
    """Base class for all errors raised by :mod:`hvrank2`."""


class ParseError(HVError, ValueError):
    """Malformed scalar, polynomial, generator or spec literal."""


class IncompatibleSpecError(HVError, ValueError):
    """Two module specs cannot be compared or mapped onto each other."""


class PreconditionError(HVError, ValueError):
    """An operation was called outside its documented domain."""


class UnsupportedDomainError(PreconditionError):
    """The input lies outside the domain on which an operation is defined."""


class WindowError(HVError, ValueError):
    """An index window is too small or not closed under the sums needed."""


class NotClassifiedError(HVError):
    """Oracle data does not have the shape of any classified module."""
