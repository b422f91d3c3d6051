"""Exception types shared across the package."""


class LandauWallError(Exception):
    """Base class for package errors."""


class DomainError(LandauWallError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class PoleError(LandauWallError):
    """Evaluation requested at (or numerically indistinguishable from) a Landau level."""


class ConvergenceError(LandauWallError):
    """A series or iteration failed to reach the requested tolerance."""


class ConfigurationError(LandauWallError):
    """Inconsistent configuration (grids, flags, couplings)."""
