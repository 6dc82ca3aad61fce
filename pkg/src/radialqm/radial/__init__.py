"""Domain model, wave-function pieces, and r^n-weighted integrals."""

from .model import (
    BOUND,
    SCATTERING,
    DeltaShell,
    Dimension,
    EnergyLevel,
    FiniteWell,
    Free,
    Harmonic,
    InfiniteWell,
    PhysicalScales,
    Potential,
    ReducedEquation,
    reduce,
    whittaker_form_constant,
)
from .norms import energy_functional, norm_integral, normalize
from .quadrature import integrate, integrate_complex
from .wavefunction import (
    ALL_TAGS,
    BESSEL_I,
    BESSEL_J,
    BESSEL_K,
    BESSEL_Y,
    GAUSS_HERMITE,
    GAUSS_LAGUERRE,
    HANKEL_1,
    HANKEL_2,
    Piece,
    RadialWaveFunction,
)

__all__ = [
    "Dimension",
    "PhysicalScales",
    "Potential",
    "InfiniteWell",
    "Harmonic",
    "Free",
    "DeltaShell",
    "FiniteWell",
    "EnergyLevel",
    "ReducedEquation",
    "reduce",
    "whittaker_form_constant",
    "BOUND",
    "SCATTERING",
    "Piece",
    "RadialWaveFunction",
    "ALL_TAGS",
    "BESSEL_J",
    "BESSEL_Y",
    "BESSEL_I",
    "BESSEL_K",
    "HANKEL_1",
    "HANKEL_2",
    "GAUSS_LAGUERRE",
    "GAUSS_HERMITE",
    "norm_integral",
    "normalize",
    "energy_functional",
    "integrate",
    "integrate_complex",
]
