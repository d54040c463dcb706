"""Exception types shared across the package."""


class ConfigError(ValueError):
    """Invalid input or configuration: weights, expressions, schemes, ranges."""


class NumericalError(RuntimeError):
    """Numerical pipeline failure: eigensolver breakdown or a non-real spectrum."""
