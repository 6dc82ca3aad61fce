"""Energies at which the confined-region intensity hits a target value.

The intensity oscillates on a scale set by the interface phase kR, so
the bracketing grid is log-spaced with its density raised until steps
stay well inside one oscillation period at the top of the range.
"""
from __future__ import annotations

import math
from typing import List, Tuple

from ..errors import DomainError
from ..radial import Dimension, PhysicalScales
from ..radial.model import DeltaShell, FiniteWell
from .delta_shell import delta_scattering
from .finite_well import finite_well_scattering
from .rootfind import log_grid, scan_roots


def quantized_transmission_energies(
    problem,
    dim: Dimension,
    T_target: float,
    eps_range: Tuple[float, float],
    scales: PhysicalScales,
) -> List[float]:
    """Ascending reduced energies in eps_range with intensity == T_target."""
    T_target = float(T_target)
    if not (T_target > 0.0 and math.isfinite(T_target)):
        raise DomainError(f"target intensity must be positive, got {T_target!r}")
    lo, hi = float(eps_range[0]), float(eps_range[1])
    if not (0.0 < lo < hi and math.isfinite(hi)):
        raise DomainError(f"energy range must satisfy 0 < lo < hi, got {eps_range!r}")

    if isinstance(problem, DeltaShell):
        gamma = problem.sign * scales.reduced_coupling(problem.g)

        def intensity(eps: float) -> float:
            return delta_scattering(
                dim, gamma, problem.R, eps, scales
            ).interior_intensity

        R = problem.R
    elif isinstance(problem, FiniteWell):

        def intensity(eps: float) -> float:
            return finite_well_scattering(
                dim, problem.V0, problem.R, eps, scales
            ).interior_intensity

        R = problem.R
    else:
        raise DomainError(f"unsupported problem type {type(problem).__name__}")

    residual = lambda eps: intensity(eps) - T_target
    # keep the top-of-range step below an eighth of the kR oscillation
    per_decade = max(512, int(math.ceil(8.0 * math.sqrt(hi) * R * math.log(10.0) / math.pi)))
    found = scan_roots(residual, log_grid(lo, hi, per_decade))
    return [eps for eps, _, _ in found]
