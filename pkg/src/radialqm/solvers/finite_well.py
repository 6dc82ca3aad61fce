"""Finite spherical well of depth V0 and radius R.

Bound levels solve a two-sided matching condition between the regular
oscillatory interior and the decaying exterior.  The condition is scanned
uniformly in the interior phase t = qR (steps well under the root
spacing, which approaches pi in t for deep wells); a log-spaced energy
scan provably undersamples that spacing for deep wells, so the uniform
phase grid replaces it here.  The exterior function enters through its
exponentially scaled form so depth never underflows.

Scattering solves the continuity plus slope-continuity system for the
interior and outgoing amplitudes against a unit incoming wave.
"""
from __future__ import annotations

import math
from typing import Callable, List, Tuple

from ..errors import ComputationError, DomainError
from ..radial import (
    BESSEL_J,
    BESSEL_K,
    Dimension,
    EnergyLevel,
    PhysicalScales,
    Piece,
    RadialWaveFunction,
)
from ..radial.norms import normalize
from ..specfun.bessel_ik import scaled_bessel_k
from ..specfun.bessel_jy import bessel_j, bessel_y
from .results import ScatteringResult, TranscendentalRoot
from .rootfind import scan_roots, uniform_grid

_NORM_TOL = 1e-10
_SCALED_COEFF_LIMIT = 330.0
_EDGE = 1.0 - 1e-10


def _check_well(V0: float, R: float) -> Tuple[float, float]:
    V0 = float(V0)
    R = float(R)
    if not (V0 > 0.0 and math.isfinite(V0)):
        raise DomainError(f"well depth must be positive, got {V0!r}")
    if not (R > 0.0 and math.isfinite(R)):
        raise DomainError(f"well radius must be positive, got {R!r}")
    return V0, R


def _residual_factory(
    nu: float, Q: float, R: float
) -> Tuple[Callable[[float], float], Callable[[float], float]]:
    """Matching residual in the interior phase t = qR, plus its local scale.

    Root condition: q J_{nu+1}(qR) K*_nu(kR) = k K*_{nu+1}(kR) J_nu(qR)
    with q^2 + k^2 = v0 and K* the e^{+x}-scaled decaying function.
    """

    def parts(t: float) -> Tuple[float, float]:
        kr = math.sqrt(max(Q * Q - t * t, 0.0))
        kr = max(kr, 5e-324)
        first = (t / R) * bessel_j(nu + 1.0, t).value * scaled_bessel_k(nu, kr).value
        second = (kr / R) * scaled_bessel_k(nu + 1.0, kr).value * bessel_j(nu, t).value
        return first, second

    def residual(t: float) -> float:
        first, second = parts(t)
        return first - second

    def local_scale(t: float) -> float:
        first, second = parts(t)
        return abs(first) + abs(second)

    return residual, local_scale


def finite_well_bound_spectrum(
    dim: Dimension, V0: float, R: float, scales: PhysicalScales
) -> List[Tuple[EnergyLevel, TranscendentalRoot]]:
    """All bound levels, shallowest binding last; empty list if none."""
    V0, R = _check_well(V0, R)
    v0 = scales.reduced_potential(V0)
    Q = math.sqrt(v0) * R
    nu = dim.nu
    residual, local_scale = _residual_factory(nu, Q, R)
    t_hi = Q * _EDGE
    grid = uniform_grid(t_hi * 1e-6, t_hi, 0.25 * math.pi)
    found = scan_roots(residual, grid)
    out: List[Tuple[EnergyLevel, TranscendentalRoot]] = []
    for N, (t, res, (ta, tb)) in enumerate(found, start=1):
        eps_mag = (Q * Q - t * t) / (R * R)
        if not eps_mag > 0.0:
            continue
        scale = local_scale(t)
        rel_res = res / scale if scale > 0.0 else res
        bracket = tuple(
            sorted(((Q * Q - ta * ta) / (R * R), (Q * Q - tb * tb) / (R * R)))
        )
        root = TranscendentalRoot(eps=eps_mag, residual=rel_res, bracket=bracket)
        out.append((EnergyLevel.bound_magnitude(N, -eps_mag, scales), root))
    return out


def finite_well_bound_wavefunction(
    dim: Dimension, V0: float, R: float, N: int, scales: PhysicalScales
) -> RadialWaveFunction:
    """Normalized N-th bound mode: oscillatory core, decaying tail."""
    if int(N) != N or N < 1:
        raise DomainError(f"mode index must be an integer >= 1, got {N!r}")
    N = int(N)
    spectrum = finite_well_bound_spectrum(dim, V0, R, scales)
    if N > len(spectrum):
        raise DomainError(
            f"well holds {len(spectrum)} bound levels, index {N} out of range"
        )
    level, _ = spectrum[N - 1]
    v0 = scales.reduced_potential(float(V0))
    kappa = math.sqrt(level.eps)
    q = math.sqrt(max(v0 - level.eps, 0.0))
    kr = kappa * R
    if kr > _SCALED_COEFF_LIMIT:
        raise ComputationError(
            "bound mode too deeply confined for coefficient arithmetic"
        )
    # matched amplitudes: interior gets the scaled exterior boundary value,
    # exterior the interior boundary value with the matching unscale factor
    a = scaled_bessel_k(dim.nu, kr).value
    b = bessel_j(dim.nu, q * R).value * math.exp(kr)
    pieces = (
        Piece(0.0, R, ((BESSEL_J, a),), scale=q),
        Piece(R, math.inf, ((BESSEL_K, b),), scale=kappa),
    )
    psi = RadialWaveFunction(dim, level, pieces)
    return normalize(psi, _NORM_TOL)


def finite_well_scattering(
    dim: Dimension, V0: float, R: float, eps: float, scales: PhysicalScales
) -> ScatteringResult:
    """Interface solve at reduced energy eps > 0 over a well of depth V0."""
    V0 = float(V0)
    if not (V0 >= 0.0 and math.isfinite(V0)):
        raise DomainError(f"well depth must be nonnegative, got {V0!r}")
    R = float(R)
    if not (R > 0.0 and math.isfinite(R)):
        raise DomainError(f"well radius must be positive, got {R!r}")
    eps = float(eps)
    if not (eps > 0.0 and math.isfinite(eps)):
        raise DomainError(f"scattering needs eps > 0, got {eps!r}")
    v0 = scales.reduced_potential(V0)
    nu = dim.nu
    k = math.sqrt(eps)
    p = math.sqrt(eps + v0)
    x = k * R
    y = p * R
    jt0 = bessel_j(nu, y).value
    jt1 = bessel_j(nu + 1.0, y).value
    j0 = bessel_j(nu, x).value
    j1 = bessel_j(nu + 1.0, x).value
    y0 = bessel_y(nu, x).value
    y1 = bessel_y(nu + 1.0, x).value
    h1_0 = complex(j0, y0)
    h1_1 = complex(j1, y1)
    h2_0 = complex(j0, -y0)
    h2_1 = complex(j1, -y1)
    # rows: amplitude continuity, then slope continuity
    m11, m12 = complex(jt0), -h1_0
    m21, m22 = complex(p * jt1), -k * h1_1
    r1, r2 = h2_0, k * h2_1
    det = m11 * m22 - m12 * m21
    if det == 0:
        raise ComputationError("interface system is singular at this energy")
    a = (r1 * m22 - m12 * r2) / det
    b = (m11 * r2 - r1 * m21) / det
    # printed closed form, kept verbatim for comparison
    E = scales.physical_energy(eps)
    mu_ratio = math.sqrt(V0 / E + 1.0) if V0 > 0.0 else 1.0
    d1 = jt0 * j1 - mu_ratio * j0 * jt1
    d2 = jt0 * y1 - mu_ratio * y0 * jt1
    rate = (16.0 / (math.pi * eps * R * R)) / (d1 * d1 + d2 * d2)
    return ScatteringResult(
        eps=eps,
        interior_coeff=a,
        exterior_out_coeff=b,
        exterior_reflection=abs(b) ** 2,
        interior_intensity=abs(a) ** 2,
        paper_T=rate,
    )
