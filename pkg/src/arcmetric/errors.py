"""Exception hierarchy.

Domain errors mean the inputs are outside the mathematical domain of an
operation; unsupported-* errors mean the request is meaningful but outside
the registered scope (we refuse rather than return a wrong number).
"""


class ArcmetricError(Exception):
    """Base class for all library errors."""


class DomainError(ArcmetricError, ValueError):
    """Input outside the mathematical domain (negative length, NaN, ...)."""


class UnsupportedSurfaceError(ArcmetricError):
    """Operation requires a surface outside the registered scope."""


class UnsupportedClassError(ArcmetricError):
    """Curve/arc class has no registered evaluation route."""


class UnsupportedCoordinatesError(ArcmetricError):
    """Coordinates outside the subspace realizable by supported classes."""


class InvalidSpecError(ArcmetricError, ValueError):
    """A path prescription is inconsistent with its driving lamination."""


class DegeneratePanelError(ArcmetricError):
    """Panel cannot see the lamination (all intersection numbers vanish)."""


class NoWitnessError(ArcmetricError):
    """A search exhausted its grids without finding a certified witness."""

    def __init__(self, message, attempts=None):
        super().__init__(message)
        self.attempts = attempts or []
