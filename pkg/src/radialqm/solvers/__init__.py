"""Closed-form solvers for the six angular-invariant radial problems."""
from .closure import closure_check
from .delta_shell import (
    delta_bound_energy,
    delta_bound_wavefunction,
    delta_scattering,
)
from .finite_well import (
    finite_well_bound_spectrum,
    finite_well_bound_wavefunction,
    finite_well_scattering,
)
from .free_particle import free_mode
from .infinite_well import infinite_well_spectrum, infinite_well_wavefunction
from .oscillator import oscillator_spectrum, oscillator_wavefunction
from .results import ClosureProbe, ScatteringResult, TranscendentalRoot
from .transmission import quantized_transmission_energies

__all__ = [
    "ClosureProbe",
    "ScatteringResult",
    "TranscendentalRoot",
    "closure_check",
    "delta_bound_energy",
    "delta_bound_wavefunction",
    "delta_scattering",
    "finite_well_bound_spectrum",
    "finite_well_bound_wavefunction",
    "finite_well_scattering",
    "free_mode",
    "infinite_well_spectrum",
    "infinite_well_wavefunction",
    "oscillator_spectrum",
    "oscillator_wavefunction",
    "quantized_transmission_energies",
]
