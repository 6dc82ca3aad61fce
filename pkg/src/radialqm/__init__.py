"""Bound states, wave-functions, and scattering for radial quantum problems.

The package solves the time-independent Schroedinger equation for six
rotationally invariant potentials in (n+1) spatial dimensions: the free
particle, the infinite spherical well, the isotropic harmonic oscillator,
an attractive or repulsive delta shell, and the finite spherical well in
both its bound and scattering regimes.  Special functions are evaluated
by hand-written kernels under :mod:`radialqm.specfun`; every spectrum can
be cross-checked against an independent finite-difference oracle under
:mod:`radialqm.oracle`.
"""

__version__ = "0.1.0"

from .errors import (
    ComputationError,
    DivergenceError,
    DomainError,
    MatchingError,
    NonNormalizableError,
    OriginDivergenceError,
    PoleError,
    RadialQMError,
)

__all__ = [
    "__version__",
    "RadialQMError",
    "DomainError",
    "PoleError",
    "DivergenceError",
    "OriginDivergenceError",
    "NonNormalizableError",
    "ComputationError",
    "MatchingError",
]
