class FatAciError(Exception):
    """Base class for every error raised by this package."""


class InvalidParamsError(FatAciError, ValueError):
    pass


class PreconditionError(FatAciError, ValueError):
    pass


class FieldTooSmallError(FatAciError, ValueError):
    pass


class BoxTooSmallError(FatAciError, RuntimeError):
    """A generator or syzygy was found on the boundary of the verification box."""


class ResolutionLengthError(FatAciError, RuntimeError):
    """A nonzero third syzygy appeared inside the verification box."""


class KernelInvariantError(FatAciError, RuntimeError):
    """A containment that holds in theory failed numerically."""


class ConfigError(FatAciError, ValueError):
    """The YAML configuration is missing, unreadable or lacks a required key."""
