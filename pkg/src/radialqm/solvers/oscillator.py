"""Isotropic harmonic confinement: ladder spectrum and Gauss-type modes.

For n >= 1 the modes are a Gaussian envelope times an associated
Laguerre polynomial in the scaled radius squared, with ladder spacing
twice the base quantum.  The n = 0 line collapses to the half-line
even-parity problem whose full ladder interleaves both parities, so that
case returns the merged Hermite ladder instead.
"""
from __future__ import annotations

import math
from typing import List

from ..errors import DomainError
from ..radial import (
    GAUSS_HERMITE,
    GAUSS_LAGUERRE,
    Dimension,
    EnergyLevel,
    PhysicalScales,
    Piece,
    RadialWaveFunction,
)
from ..radial.norms import normalize

_NORM_TOL = 1e-10


def _check_omega(omega: float) -> float:
    omega = float(omega)
    if not (omega > 0.0 and math.isfinite(omega)):
        raise DomainError(f"oscillator frequency must be positive, got {omega!r}")
    return omega


def oscillator_spectrum(
    dim: Dimension, omega: float, count: int, scales: PhysicalScales
) -> List[EnergyLevel]:
    """E_N = hbar*omega*(2N + (n+1)/2); merged half-step ladder when n = 0."""
    omega = _check_omega(omega)
    if int(count) != count or count < 1:
        raise DomainError(f"level count must be an integer >= 1, got {count!r}")
    mu = scales.oscillator_scale(omega)
    levels = []
    for N in range(int(count)):
        if dim.n == 0:
            eps = 2.0 * mu * (N + 0.5)
        else:
            eps = 2.0 * mu * (2.0 * N + 0.5 * (dim.n + 1))
        levels.append(EnergyLevel.bound(N, eps, scales))
    return levels


def oscillator_wavefunction(
    dim: Dimension, omega: float, N: int, scales: PhysicalScales
) -> RadialWaveFunction:
    """Normalized N-th mode; Laguerre form for n >= 1, Hermite form for n = 0."""
    omega = _check_omega(omega)
    if int(N) != N or N < 0:
        raise DomainError(f"mode index must be an integer >= 0, got {N!r}")
    N = int(N)
    mu = scales.oscillator_scale(omega)
    if dim.n == 0:
        eps = 2.0 * mu * (N + 0.5)
        piece = Piece(0.0, math.inf, ((GAUSS_HERMITE, 1.0),), scale=mu, degree=N)
    else:
        eps = 2.0 * mu * (2.0 * N + 0.5 * (dim.n + 1))
        piece = Piece(
            0.0,
            math.inf,
            ((GAUSS_LAGUERRE, 1.0),),
            scale=mu,
            degree=N,
            alpha=dim.nu,
        )
    psi = RadialWaveFunction(dim, EnergyLevel.bound(N, eps, scales), (piece,))
    return normalize(psi, _NORM_TOL)
