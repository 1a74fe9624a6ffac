"""Exception hierarchy shared by all kernelframe modules."""


class KernelFrameError(Exception):
    """Base class for every error raised by this package."""


class DomainError(KernelFrameError):
    """Mathematically invalid input (point outside the open disk, bad range)."""


class ValidationError(KernelFrameError):
    """Malformed data: shape mismatch, unknown key, unparseable payload."""


class NumericError(KernelFrameError):
    """A computation could not meet its stated numerical guarantee."""


class ConditioningError(NumericError):
    """Truncation or scaling too aggressive for the requested accuracy.

    Carries ``suggested_degree`` when a larger working truncation would fix it.
    """

    def __init__(self, message, suggested_degree=None):
        super().__init__(message)
        self.suggested_degree = suggested_degree


class NotAFrameError(KernelFrameError):
    """Operation requires an invertible frame operator and the family has none."""


class RootFindingError(NumericError):
    """Boundary root solve failed (root off the circle or not polishable)."""


class DegenerateRootError(RootFindingError):
    """Boundary root with vanishing derivative; the family would be singular."""


class SerializationError(ValidationError):
    """Payload cannot be written or does not round-trip to a known type."""
