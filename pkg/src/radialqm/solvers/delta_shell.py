"""Contact shell at radius R: single bound level and stationary scattering.

The bound level solves a product condition between the two modified
cylinder functions evaluated on the shell; the product decreases from
its small-argument supremum, so for positive order a level exists only
when the coupling-radius product exceeds twice the order.  Scattering
solves the two-condition interface system (continuity plus slope jump)
for the interior and outgoing amplitudes with a unit incoming wave.
"""
from __future__ import annotations

import math
from typing import Optional, Tuple

from ..errors import ComputationError, DomainError, MatchingError
from ..radial import (
    BESSEL_I,
    BESSEL_K,
    Dimension,
    EnergyLevel,
    PhysicalScales,
    Piece,
    RadialWaveFunction,
)
from ..radial.norms import normalize
from ..specfun.bessel_ik import bessel_i, bessel_k, scaled_bessel_i, scaled_bessel_k
from ..specfun.bessel_jy import bessel_j, bessel_y
from .results import ScatteringResult, TranscendentalRoot
from .rootfind import log_grid, scan_roots

_EULER = 0.5772156649015329
_NORM_TOL = 1e-10
_COEFF_LIMIT = 650.0


def _ik_product(nu: float, x: float) -> float:
    """I_nu(x) K_nu(x) without overflow at large argument."""
    if x <= 600.0:
        return bessel_i(nu, x).value * bessel_k(nu, x).value
    return scaled_bessel_i(nu, x).value * scaled_bessel_k(nu, x).value


def _check_shell(gamma: float, R: float) -> Tuple[float, float]:
    gamma = float(gamma)
    R = float(R)
    if not (gamma > 0.0 and math.isfinite(gamma)):
        raise DomainError(f"shell coupling must be positive, got {gamma!r}")
    if not (R > 0.0 and math.isfinite(R)):
        raise DomainError(f"shell radius must be positive, got {R!r}")
    return gamma, R


def delta_bound_energy(
    dim: Dimension, gamma: float, R: float, scales: PhysicalScales
) -> Optional[Tuple[EnergyLevel, TranscendentalRoot]]:
    """The unique attractive-shell level, or None below the coupling threshold."""
    gamma, R = _check_shell(gamma, R)
    nu = dim.nu
    gr = gamma * R
    if nu > 0.0 and gr <= 2.0 * nu:
        return None
    target = 1.0 / gr
    f = lambda x: _ik_product(nu, x) - target

    x_lo = 1e-8
    if nu == 0.0:
        # product grows only logarithmically, so tiny couplings root far down
        x_lo = min(x_lo, 0.2 * 2.0 * math.exp(-_EULER - target))
    elif nu < 0.0:
        x_lo = min(x_lo, 0.02 * gr)
    x_lo = max(x_lo, 1e-300)
    x_hi = 0.75 * gr + 10.0
    found = scan_roots(f, log_grid(x_lo, x_hi, 512))
    if not found:
        return None
    if len(found) > 1:
        raise ComputationError("shell product condition crossed more than once")
    x, fx, (xa, xb) = found[0]
    eps_mag = (x / R) ** 2
    bracket = tuple(sorted(((xa / R) ** 2, (xb / R) ** 2)))
    root = TranscendentalRoot(eps=eps_mag, residual=fx, bracket=bracket)
    return EnergyLevel.bound_magnitude(1, -eps_mag, scales), root


def delta_bound_wavefunction(
    dim: Dimension, gamma: float, R: float, scales: PhysicalScales
) -> RadialWaveFunction:
    """Normalized bound mode: regular inside the shell, decaying outside."""
    found = delta_bound_energy(dim, gamma, R, scales)
    if found is None:
        raise MatchingError("no bound level exists for this coupling and radius")
    level, _ = found
    kappa = math.sqrt(level.eps)
    xr = kappa * R
    if xr > _COEFF_LIMIT:
        raise ComputationError("interface coefficients exceed the double range")
    a = bessel_k(dim.nu, xr).value
    b = bessel_i(dim.nu, xr).value
    pieces = (
        Piece(0.0, R, ((BESSEL_I, a),), scale=kappa),
        Piece(R, math.inf, ((BESSEL_K, b),), scale=kappa),
    )
    psi = RadialWaveFunction(dim, level, pieces)
    return normalize(psi, _NORM_TOL)


def delta_scattering(
    dim: Dimension,
    gamma_signed: float,
    R: float,
    eps: float,
    scales: PhysicalScales,
) -> ScatteringResult:
    """Interface solve at reduced energy eps; gamma_signed < 0 attracts."""
    R = float(R)
    if not (R > 0.0 and math.isfinite(R)):
        raise DomainError(f"shell radius must be positive, got {R!r}")
    eps = float(eps)
    if not (eps > 0.0 and math.isfinite(eps)):
        raise DomainError(f"scattering needs eps > 0, got {eps!r}")
    g = float(gamma_signed)
    if not math.isfinite(g):
        raise DomainError(f"coupling must be finite, got {gamma_signed!r}")
    nu = dim.nu
    k = math.sqrt(eps)
    x = k * R
    j0 = bessel_j(nu, x).value
    j1 = bessel_j(nu + 1.0, x).value
    y0 = bessel_y(nu, x).value
    y1 = bessel_y(nu + 1.0, x).value
    h1_0 = complex(j0, y0)
    h1_1 = complex(j1, y1)
    h2_0 = complex(j0, -y0)
    h2_1 = complex(j1, -y1)
    # rows: amplitude continuity, then slope jump equal to g times the value
    m11, m12 = complex(j0), -h1_0
    m21, m22 = complex(k * j1 - g * j0), -k * h1_1
    r1, r2 = h2_0, k * h2_1
    det = m11 * m22 - m12 * m21
    if det == 0:
        raise MatchingError("interface system is singular at this energy")
    a = (r1 * m22 - m12 * r2) / det
    b = (m11 * r2 - r1 * m21) / det
    t1 = math.pi * g * R * j0 * y0
    t2 = math.pi * g * R * j0 * j0 - 2.0
    return ScatteringResult(
        eps=eps,
        interior_coeff=a,
        exterior_out_coeff=b,
        exterior_reflection=abs(b) ** 2,
        interior_intensity=abs(a) ** 2,
        paper_T=16.0 / (t1 * t1 + t2 * t2),
    )
