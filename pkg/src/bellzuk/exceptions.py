"""Exception types raised by bellzuk."""


class BellZukError(ValueError):
    """Base class for all library errors."""


class SizeLimitError(BellZukError):
    """A dense operator would exceed the configured qubit cap."""


class ShapeError(BellZukError):
    """Operands have incompatible or invalid shapes."""


class DomainError(BellZukError):
    """A scalar argument lies outside its allowed range."""


class PartitionError(BellZukError):
    """A site partition is overlapping, incomplete or out of order."""


class IncompleteDataError(BellZukError):
    """A correlation table is missing entries required by a computation."""
