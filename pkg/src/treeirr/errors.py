"""Exception types shared across the package."""


class TreeirrError(Exception):
    """Base class for all package errors."""


class SelfLoopError(TreeirrError):
    pass


class VertexOutOfRangeError(TreeirrError):
    pass


class NotATreeError(TreeirrError):
    pass


class LengthMismatchError(TreeirrError):
    pass


class NotRealizableError(TreeirrError):
    pass


class CapExceededError(TreeirrError):
    pass


class OrderTooSmallError(TreeirrError):
    pass


class SpecInvalidError(TreeirrError):
    pass


class NoValidSpecError(TreeirrError):
    pass


class DomainError(TreeirrError):
    pass


class UnknownClaimError(TreeirrError):
    pass


class OutOfScopeClaimError(TreeirrError):
    pass


class ParseError(TreeirrError):
    pass
