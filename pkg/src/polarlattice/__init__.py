"""Excitons and cavity polaritons of a 2D optical lattice with two atoms per site."""
__version__ = "0.1.0"

from .errors import ConfigError, DomainError  # noqa: E402
from .params import SystemParams  # noqa: E402
