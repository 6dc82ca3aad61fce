"""Truncated continuum-overlap probe for the regular radial modes.

The weighted overlap of two regular modes over (0, r_max) has a closed
form (the cross-product rule for cylinder functions), so the probe only
integrates that closed form against a narrow unit-height Gaussian in the
second wavenumber.  As r_max grows the smeared value approaches the
Gaussian evaluated at the wavenumber separation: one on the diagonal,
zero far off it.  The probe symmetrizes the two slot assignments, so the
result is exactly invariant under swapping the wavenumbers.
"""
from __future__ import annotations

import math

from ..errors import DomainError
from ..radial import Dimension
from ..radial.quadrature import integrate
from ..specfun.bessel_jy import bessel_j
from .results import ClosureProbe

_WINDOW_SIGMAS = 8.0
_QUAD_TOL = 1e-7
_DIAGONAL_CUT = 1e-7


def _overlap(nu: float, a: float, k1: float, k2: float) -> float:
    """Integral of r J_nu(k1 r) J_nu(k2 r) dr over (0, a)."""
    mean = 0.5 * (k1 + k2)
    if abs(k1 - k2) <= _DIAGONAL_CUT * mean:
        x = mean * a
        j0 = bessel_j(nu, x).value
        j1 = bessel_j(nu + 1.0, x).value
        # diagonal form with the nu-1 order removed via the recurrence
        return 0.5 * a * a * (j0 * j0 + j1 * j1 - 2.0 * nu * j0 * j1 / x)
    ja0 = bessel_j(nu, k1 * a).value
    ja1 = bessel_j(nu + 1.0, k1 * a).value
    jb0 = bessel_j(nu, k2 * a).value
    jb1 = bessel_j(nu + 1.0, k2 * a).value
    return a * (k1 * ja1 * jb0 - k2 * ja0 * jb1) / (k1 * k1 - k2 * k2)


def _smeared(nu: float, a: float, k_fix: float, center: float, sigma: float) -> float:
    lo = max(center - _WINDOW_SIGMAS * sigma, 0.0)
    hi = center + _WINDOW_SIGMAS * sigma

    def integrand(q: float) -> float:
        arg = (q - center) / sigma
        weight = math.exp(-0.5 * arg * arg)
        return weight * math.sqrt(k_fix * q) * _overlap(nu, a, k_fix, q)

    value, _ = integrate(integrand, lo, hi, _QUAD_TOL)
    return value


def closure_check(
    dim: Dimension, k: float, k_prime: float, r_max: float, smear_width: float
) -> ClosureProbe:
    """Smeared truncated overlap of the modes at k and k_prime."""
    k = float(k)
    k_prime = float(k_prime)
    r_max = float(r_max)
    smear_width = float(smear_width)
    if not (k > 0.0 and k_prime > 0.0):
        raise DomainError("closure probe needs positive wavenumbers")
    if not (r_max > 0.0 and math.isfinite(r_max)):
        raise DomainError(f"r_max must be positive and finite, got {r_max!r}")
    if not (smear_width > 0.0 and math.isfinite(smear_width)):
        raise DomainError(f"smear width must be positive, got {smear_width!r}")
    nu = dim.nu
    straight = _smeared(nu, r_max, k, k_prime, smear_width)
    swapped = _smeared(nu, r_max, k_prime, k, smear_width)
    value = 0.5 * (straight + swapped)
    return ClosureProbe(
        k=k, k_prime=k_prime, r_max=r_max, smear_width=smear_width, value=value
    )
