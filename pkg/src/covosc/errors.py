"""Exception types shared across the package."""


class DomainError(ValueError):
    """An input lies outside the physically meaningful domain."""


class QuadratureError(RuntimeError):
    """An adaptive integrator failed to reach the requested tolerance."""


class GridError(RuntimeError):
    """A finite-difference grid is too coarse for the requested tolerance."""
