"""Validated Bessel/Whittaker order parameter."""

from __future__ import annotations

import math
from dataclasses import dataclass

from ..errors import DomainError


@dataclass(frozen=True)
class Order:
    """Order nu of a radial special function.

    The radial problems in this package only produce nu = (n - 1)/2 with
    dimension count n >= 0, so construction rejects anything below -1/2.
    """

    nu: float

    def __post_init__(self) -> None:
        nu = float(self.nu)
        if not math.isfinite(nu):
            raise DomainError(f"order must be finite, got {self.nu!r}")
        if nu < -0.5:
            raise DomainError(f"order must be >= -1/2, got {nu!r}")
        object.__setattr__(self, "nu", nu)

    def __float__(self) -> float:
        return self.nu
