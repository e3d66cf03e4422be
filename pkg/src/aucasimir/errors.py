"""Shared exception types."""


class DataFormatError(ValueError):
    """A data or config file could not be parsed or failed validation."""


class ConfigError(ValueError):
    """A run configuration is incomplete or inconsistent."""


class ConvergenceError(RuntimeError):
    """A quadrature, sum, or fit failed to reach its requested accuracy."""
