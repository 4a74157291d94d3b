"""Exception types shared across the package."""


class PolaritonError(Exception):
    """Base class for errors raised by this package."""


class ConfigError(PolaritonError):
    """A scenario configuration is malformed or violates an invariant."""


class NumericError(PolaritonError):
    """A numerical routine failed to converge or hit a singular configuration."""


class AbyssNotFoundError(NumericError):
    """No interior loss minimum exists in the requested frequency band."""


class BranchCutError(ValueError):
    """Argument lies on the branch cut of a special function."""
