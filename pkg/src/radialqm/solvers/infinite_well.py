"""Impenetrable radial box: exact levels and normalized modes.

The regular interior solution vanishes on the wall when the scaled
wavenumber sits on a first-kind cylinder zero, so the spectrum is the
zero table squared and the norm constant follows from the closed-form
weighted integral of the squared mode, which collapses to the square of
the next-order function at the zero.
"""
from __future__ import annotations

import math
from typing import List

from ..errors import DomainError
from ..radial import (
    BESSEL_J,
    Dimension,
    EnergyLevel,
    PhysicalScales,
    Piece,
    RadialWaveFunction,
)
from ..specfun import bessel_j, bessel_j_zero


def _check_radius(R: float) -> float:
    R = float(R)
    if not (R > 0.0 and math.isfinite(R)):
        raise DomainError(f"well radius must be positive and finite, got {R!r}")
    return R


def infinite_well_spectrum(
    dim: Dimension, R: float, count: int, scales: PhysicalScales
) -> List[EnergyLevel]:
    """Levels E_N = (hbar^2/2m)(z_N/R)^2 with z_N the N-th zero of J_nu."""
    R = _check_radius(R)
    if int(count) != count or count < 1:
        raise DomainError(f"level count must be an integer >= 1, got {count!r}")
    levels = []
    for N in range(1, int(count) + 1):
        z = bessel_j_zero(dim.nu, N)
        eps = (z / R) ** 2
        levels.append(EnergyLevel.bound(N, eps, scales))
    return levels


def infinite_well_wavefunction(
    dim: Dimension, R: float, N: int, scales: PhysicalScales
) -> RadialWaveFunction:
    """Normalized N-th mode, zero at the wall and beyond."""
    R = _check_radius(R)
    if int(N) != N or N < 1:
        raise DomainError(f"mode index must be an integer >= 1, got {N!r}")
    N = int(N)
    z = bessel_j_zero(dim.nu, N)
    k = z / R
    # weighted square integrates to (R^2/2) J_{nu+1}(z)^2 for unit amplitude
    c = math.sqrt(2.0) / (R * abs(bessel_j(dim.nu + 1.0, z).value))
    piece = Piece(0.0, R, ((BESSEL_J, c),), scale=k)
    level = EnergyLevel.bound(N, k * k, scales)
    return RadialWaveFunction(dim, level, (piece,))
