"""Package-wide exception taxonomy.

Domain violations raise DomainError (PoleError for evaluation exactly at a
pole).  Quantities that are mathematically infinite or non-integrable raise a
DivergenceError subtype so callers can tell an unnormalizable candidate from
a plain numerical failure.  Iterative routines that fail to converge raise
ComputationError.
"""
from __future__ import annotations


class RadialQMError(Exception):
    """Base class for all package errors."""


class DomainError(RadialQMError, ValueError):
    """Argument outside the operation's domain."""


class PoleError(DomainError):
    """Evaluation exactly at a pole of the function."""


class DivergenceError(RadialQMError, ArithmeticError):
    """A mathematically divergent quantity was requested."""


class OriginDivergenceError(DivergenceError):
    """Non-integrable divergence at r = 0.

    Signals a second-kind-contaminated candidate wave-function whose
    probability integral does not exist down to the origin.
    """


class NonNormalizableError(DivergenceError):
    """The wave-function is not square-integrable on its full domain."""


class ComputationError(RadialQMError, ArithmeticError):
    """An iterative numerical procedure failed to converge."""


class MatchingError(ComputationError):
    """Piecewise matching of a wave-function failed or is ill-posed."""
