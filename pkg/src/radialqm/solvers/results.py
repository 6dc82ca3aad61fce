"""Result records returned by the closed-form solvers."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Tuple

from ..errors import DomainError


@dataclass(frozen=True)
class TranscendentalRoot:
    """One solved root of a matching condition.

    eps is the magnitude of the reduced energy at the root, residual the
    value of the defining equation there, and bracket a reduced-energy
    interval whose endpoints straddle the sign change.
    """

    eps: float
    residual: float
    bracket: Tuple[float, float]

    def __post_init__(self) -> None:
        if not (self.eps > 0.0 and math.isfinite(self.eps)):
            raise DomainError(f"root energy must be positive, got {self.eps!r}")
        if len(self.bracket) != 2:
            raise DomainError("bracket must hold exactly two endpoints")


@dataclass(frozen=True)
class ScatteringResult:
    """Stationary scattering state summary at one energy.

    interior_coeff multiplies the regular interior piece, exterior_out_coeff
    the outgoing exterior piece whose incoming partner has unit amplitude.
    exterior_reflection and interior_intensity are the squared moduli.
    paper_T re-evaluates the closed-form rate printed in the source
    derivation; it is carried for comparison only and the numerically
    solved coefficients stay authoritative.
    """

    eps: float
    interior_coeff: complex
    exterior_out_coeff: complex
    exterior_reflection: float
    interior_intensity: float
    paper_T: float

    def __post_init__(self) -> None:
        if not (self.eps > 0.0 and math.isfinite(self.eps)):
            raise DomainError(f"scattering energy must be positive, got {self.eps!r}")


@dataclass(frozen=True)
class ClosureProbe:
    """Truncated, smeared continuum-overlap sample for one mode pair."""

    k: float
    k_prime: float
    r_max: float
    smear_width: float
    value: float

    def __post_init__(self) -> None:
        if not (self.k > 0.0 and self.k_prime > 0.0):
            raise DomainError("closure probe needs positive wavenumbers")
        if not (self.r_max > 0.0 and math.isfinite(self.r_max)):
            raise DomainError(f"r_max must be positive and finite, got {self.r_max!r}")
        if not (self.smear_width > 0.0):
            raise DomainError(f"smear width must be positive, got {self.smear_width!r}")
