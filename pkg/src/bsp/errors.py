"""Exception types shared across the package."""


class BspError(Exception):
    """Base class for all package-specific errors."""


class DimensionMismatchError(BspError):
    pass


class SingularBasisError(BspError):
    pass


class NotSpanningError(BspError):
    pass


class NotFullDimensionalError(BspError):
    pass


class NotTwoLevelError(BspError):
    pass


class BadParameterError(BspError):
    pass


class MalformedSlackError(BspError):
    pass


class NormalizationFailedError(BspError):
    """Raised when the sign/translation normalization cannot satisfy its
    post-conditions; this signals a bug, not a valid outcome."""


class CheckpointCorruptError(BspError):
    pass
