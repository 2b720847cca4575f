"""Exception types shared across the numerical modules."""


class NodoidError(Exception):
    """Base class for numerical failures in this package."""


class BracketError(NodoidError):
    """A bisection bracket did not enclose a sign change."""


class QuadratureError(NodoidError):
    """Adaptive quadrature failed to reach the requested tolerance."""
