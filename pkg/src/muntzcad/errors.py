"""Exception hierarchy for the kernel.

Every domain violation raises a subclass of KernelError so callers (CLI,
service) can map failures to structured error payloads uniformly.
"""


class KernelError(ValueError):
    """Base class for all kernel domain errors."""


class NotAPartition(KernelError):
    """Parts are negative or not non-increasing."""


class BoxOutsideDiagram(KernelError):
    """Requested (row, column) box lies outside the Young diagram."""


class EmptyPartition(KernelError):
    """Operation requires a non-empty partition."""


class LengthExceedsOrder(KernelError):
    """Partition has more positive parts than the space order allows."""


class NotRealizable(KernelError):
    """Exponent list does not come from any partition."""


class EnumerationTooLarge(KernelError):
    """Tableau or path enumeration would exceed the configured bound."""


class RepeatedArguments(KernelError):
    """Arguments must be pairwise distinct for this computation."""


class NotContained(KernelError):
    """Inner partition of a skew shape is not contained in the outer one."""


class NonPositiveArgument(KernelError):
    """Arguments must be strictly positive for a non-empty shape."""


class NonPositiveEndpoint(KernelError):
    """Interval endpoints must be strictly positive for a non-empty shape."""


class DegenerateInterval(KernelError):
    """Interval endpoints must satisfy a < b."""


class SingularSystem(KernelError):
    """Linear system unexpectedly singular; indicates a bug upstream."""


class FirstTwoPartsUnequal(KernelError):
    """Two-term derivative recurrence needs the first two parts equal."""


class FirstTwoPartsEqual(KernelError):
    """Three-term derivative recurrence needs the first two parts distinct."""


class NotAnElevation(KernelError):
    """Target partition does not give a superspace of the source space."""


class IndexOutOfRange(KernelError):
    """Basis or path index outside 0..n."""


class PathCountTooLarge(KernelError):
    """Path enumeration would exceed the configured bound."""


class DimensionMismatch(KernelError):
    """Control points do not all have the same dimension."""


class DegenerateDirection(KernelError):
    """Last control leg is zero; tangent direction undefined."""
