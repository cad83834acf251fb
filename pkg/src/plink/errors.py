"""Exception types raised across the package."""


class PlinkError(Exception):
    """Base class for all package errors."""


class DuplicateVertexId(PlinkError):
    pass


class DimensionOutOfRange(PlinkError):
    pass


class SimplexNotInComplex(PlinkError):
    pass


class DuplicateParameter(PlinkError):
    pass


class GenericityExhausted(PlinkError):
    """No generic embedding was found within the resample budget."""


class DegenerateConfiguration(PlinkError):
    """A crossing computation hit a non-generic configuration.

    Callers are expected to resample the embedding rather than perturb it.
    """


class DegenerateApex(DegenerateConfiguration):
    pass


class ComplexTooLarge(PlinkError):
    pass


class NotATetrahedron(PlinkError):
    pass


class TransportBroken(PlinkError):
    """A transported sphere or pair failed validation."""
