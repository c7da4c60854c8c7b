"""Exception types raised by the kernel."""


class DomainError(ValueError):
    """An argument lies outside the domain of an operation."""


class NotInnerBladeError(DomainError):
    pass


class NotOuterBladeError(DomainError):
    pass


class NotAFactorizationError(DomainError):
    pass


class ResourceLimitError(RuntimeError):
    """A dimension or size cap was exceeded."""


MAX_DIM = 32
