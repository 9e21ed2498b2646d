class PolarLatticeError(Exception):
    pass


class DomainError(PolarLatticeError, ValueError):
    """Input outside the mathematical or physical domain of an operation."""


class ConfigError(PolarLatticeError, ValueError):
    """Configuration text could not be parsed."""
