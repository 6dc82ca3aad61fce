"""Piecewise radial wave-functions built from tagged analytic forms.

A wave-function is a list of pieces, each an interval on r >= 0 plus a
linear combination of symbolic forms.  Cylinder-family tags (BesselJ,
BesselY, Hankel1, Hankel2) and modified-family tags (BesselI, BesselK)
denote amplitude r^(-nu) * Z_nu(scale * r); the Gauss tags denote the
oscillator families exp(-scale*r^2/2) * L_N^(alpha)(scale*r^2) and
exp(-scale*r^2/2) * H_N(sqrt(scale)*r).  Tags keep solutions
introspectable: normalization and the validation oracle dispatch on
them instead of on opaque callables.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Optional, Sequence, Union

from ..errors import DomainError, OriginDivergenceError
from ..specfun import (
    bessel_i,
    bessel_j,
    bessel_k,
    bessel_y,
    gamma_fn,
    hankel,
    hermite,
    hermite_derivative,
    laguerre,
    laguerre_derivative,
)
from .model import Dimension, EnergyLevel

BESSEL_J = "BesselJ"
BESSEL_Y = "BesselY"
BESSEL_I = "BesselI"
BESSEL_K = "BesselK"
HANKEL_1 = "Hankel1"
HANKEL_2 = "Hankel2"
GAUSS_LAGUERRE = "GaussLaguerre"
GAUSS_HERMITE = "GaussHermite"

ALL_TAGS = (
    BESSEL_J,
    BESSEL_Y,
    BESSEL_I,
    BESSEL_K,
    HANKEL_1,
    HANKEL_2,
    GAUSS_LAGUERRE,
    GAUSS_HERMITE,
)

# Forms that blow up (or break symmetry) as r -> 0.
IRREGULAR_TAGS = frozenset({BESSEL_Y, BESSEL_K, HANKEL_1, HANKEL_2})
GAUSS_TAGS = frozenset({GAUSS_LAGUERRE, GAUSS_HERMITE})

Coefficient = Union[float, complex]


@dataclass(frozen=True)
class Piece:
    """One interval of a radial solution.

    terms pairs a form tag with its coefficient; scale is the wavenumber
    k (cylinder/modified families) or the inverse-square length mu
    (Gauss families).  degree and alpha only apply to the Gauss tags.
    """

    r_lo: float
    r_hi: float
    terms: tuple[tuple[str, Coefficient], ...]
    scale: float
    degree: Optional[int] = None
    alpha: Optional[float] = None

    def __post_init__(self) -> None:
        if not (self.r_lo >= 0.0 and math.isfinite(self.r_lo)):
            raise DomainError(f"piece lower bound must be finite and >= 0, got {self.r_lo!r}")
        if not self.r_hi > self.r_lo:
            raise DomainError(f"piece needs r_hi > r_lo, got [{self.r_lo!r}, {self.r_hi!r}]")
        if not self.terms:
            raise DomainError("piece needs at least one term")
        for tag, _ in self.terms:
            if tag not in ALL_TAGS:
                raise DomainError(f"unknown form tag {tag!r}")
        if not (self.scale > 0.0 and math.isfinite(self.scale)):
            raise DomainError(f"piece scale must be positive and finite, got {self.scale!r}")
        gauss = [tag in GAUSS_TAGS for tag, _ in self.terms]
        if any(gauss) and not all(gauss):
            raise DomainError("cannot mix Gauss forms with cylinder forms in one piece")
        if any(gauss) and self.degree is None:
            raise DomainError("Gauss forms need a polynomial degree")

    @property
    def is_unbounded(self) -> bool:
        return math.isinf(self.r_hi)

    def contains(self, r: float) -> bool:
        return self.r_lo <= r <= self.r_hi

    def touches_origin(self) -> bool:
        return self.r_lo == 0.0

    def irregular_at_origin(self) -> bool:
        return self.touches_origin() and any(
            tag in IRREGULAR_TAGS and coeff != 0.0 for tag, coeff in self.terms
        )

    def _term_value(self, tag: str, nu: float, r: float) -> Coefficient:
        if tag in GAUSS_TAGS:
            mu = self.scale
            envelope = math.exp(-0.5 * mu * r * r)
            if tag == GAUSS_LAGUERRE:
                return envelope * laguerre(self.degree, self.alpha, mu * r * r)
            return envelope * hermite(self.degree, math.sqrt(mu) * r)
        x = self.scale * r
        if r == 0.0:
            return self._origin_value(tag, nu)
        radial_power = r ** (-nu)
        if tag == BESSEL_J:
            return radial_power * bessel_j(nu, x).value
        if tag == BESSEL_Y:
            return radial_power * bessel_y(nu, x).value
        if tag == BESSEL_I:
            return radial_power * bessel_i(nu, x).value
        if tag == BESSEL_K:
            return radial_power * bessel_k(nu, x).value
        if tag == HANKEL_1:
            return radial_power * hankel(1, nu, x).value
        return radial_power * hankel(2, nu, x).value

    def _origin_value(self, tag: str, nu: float) -> float:
        # Limits of r^(-nu) Z_nu(k r): finite for the regular forms only.
        if tag == BESSEL_J or tag == BESSEL_I:
            return (0.5 * self.scale) ** nu / gamma_fn(nu + 1.0).value
        raise OriginDivergenceError(
            f"form {tag} is singular (or parity-odd) at the origin"
        )

    def _term_derivative(self, tag: str, nu: float, r: float) -> Coefficient:
        if tag in GAUSS_TAGS:
            mu = self.scale
            envelope = math.exp(-0.5 * mu * r * r)
            if tag == GAUSS_LAGUERRE:
                z = mu * r * r
                poly = laguerre(self.degree, self.alpha, z)
                slope = laguerre_derivative(self.degree, self.alpha, z)
                return envelope * mu * r * (2.0 * slope - poly)
            root = math.sqrt(mu)
            poly = hermite(self.degree, root * r)
            slope = hermite_derivative(self.degree, root * r)
            return envelope * (root * slope - mu * r * poly)
        # d/dr [r^(-nu) Z_nu(k r)] = -+ k r^(-nu) Z_(nu+1)(k r)
        k = self.scale
        x = k * r
        if r == 0.0:
            # r^(-nu) Z_(nu+1)(k r) ~ r -> 0 for every nu >= -1/2.
            if tag == BESSEL_J or tag == BESSEL_I:
                return 0.0
            raise OriginDivergenceError(
                f"form {tag} is singular (or parity-odd) at the origin"
            )
        radial_power = r ** (-nu)
        if tag == BESSEL_J:
            return -k * radial_power * bessel_j(nu + 1.0, x).value
        if tag == BESSEL_Y:
            return -k * radial_power * bessel_y(nu + 1.0, x).value
        if tag == BESSEL_I:
            return k * radial_power * bessel_i(nu + 1.0, x).value
        if tag == BESSEL_K:
            return -k * radial_power * bessel_k(nu + 1.0, x).value
        if tag == HANKEL_1:
            return -k * radial_power * hankel(1, nu + 1.0, x).value
        return -k * radial_power * hankel(2, nu + 1.0, x).value

    def amplitude(self, nu: float, r: float) -> Coefficient:
        total: Coefficient = 0.0
        for tag, coeff in self.terms:
            if coeff == 0.0:
                continue
            total += coeff * self._term_value(tag, nu, r)
        return total

    def amplitude_derivative(self, nu: float, r: float) -> Coefficient:
        total: Coefficient = 0.0
        for tag, coeff in self.terms:
            if coeff == 0.0:
                continue
            total += coeff * self._term_derivative(tag, nu, r)
        return total

    def descriptor(self) -> dict:
        out: dict = {
            "r_min": self.r_lo,
            "r_max": None if self.is_unbounded else self.r_hi,
            "forms": [tag for tag, _ in self.terms],
            "coefficients": [
                [complex(c).real, complex(c).imag] for _, c in self.terms
            ],
            "scale": self.scale,
        }
        if self.degree is not None:
            out["degree"] = self.degree
        if self.alpha is not None:
            out["alpha"] = self.alpha
        return out


@dataclass(frozen=True)
class RadialWaveFunction:
    """Piecewise solution Psi(r) with an overall normalization constant.

    Sampling multiplies the stored piece combination by norm_constant,
    so normalization rescales one number and never touches the
    coefficients a solver chose.
    """

    dimension: Dimension
    energy: Union[EnergyLevel, float]
    pieces: tuple[Piece, ...]
    norm_constant: float = 1.0

    def __post_init__(self) -> None:
        if not self.pieces:
            raise DomainError("wave-function needs at least one piece")
        if not (self.norm_constant >= 0.0 and math.isfinite(self.norm_constant)):
            raise DomainError(f"norm constant must be finite and >= 0, got {self.norm_constant!r}")
        for earlier, later in zip(self.pieces, self.pieces[1:]):
            if later.r_lo < earlier.r_hi:
                raise DomainError("pieces must be ordered and non-overlapping")

    @property
    def eps(self) -> float:
        if isinstance(self.energy, EnergyLevel):
            return self.energy.eps
        return float(self.energy)

    def piece_index_at(self, r: float) -> int:
        if not (r >= 0.0 and math.isfinite(r)):
            raise DomainError(f"radius must be finite and >= 0, got {r!r}")
        for idx, piece in enumerate(self.pieces):
            if piece.contains(r):
                return idx
        return -1

    def sample(self, r: float) -> Coefficient:
        idx = self.piece_index_at(r)
        if idx < 0:
            return 0.0
        value = self.pieces[idx].amplitude(self.dimension.nu, r)
        return self.norm_constant * value

    def derivative(self, r: float) -> Coefficient:
        idx = self.piece_index_at(r)
        if idx < 0:
            return 0.0
        value = self.pieces[idx].amplitude_derivative(self.dimension.nu, r)
        return self.norm_constant * value

    def with_norm_constant(self, constant: float) -> "RadialWaveFunction":
        return replace(self, norm_constant=constant)

    def csv_rows(self, radii: Sequence[float]) -> list[tuple[float, float, float, int]]:
        """Rows (r, psi_real, psi_imag, piece_index) for export."""
        rows = []
        for r in radii:
            value = complex(self.sample(r))
            rows.append((float(r), value.real, value.imag, self.piece_index_at(r)))
        return rows

    def descriptor(self) -> dict:
        if isinstance(self.energy, EnergyLevel):
            energy: Union[dict, float] = {
                "N": self.energy.N,
                "eps": self.energy.eps,
                "E": self.energy.E,
                "sign": self.energy.sign,
            }
        else:
            energy = float(self.energy)
        return {
            "dimension": self.dimension.n,
            "energy": energy,
            "pieces": [piece.descriptor() for piece in self.pieces],
            "norm_constant": self.norm_constant,
        }
