from __future__ import annotations

import os

import pytest

from radialqm.radial.model import PhysicalScales
from radialqm.radial.quadrature import integrate

FIXTURE_DIR = os.path.join(os.path.dirname(__file__), "fixtures")


@pytest.fixture(scope="session")
def scales() -> PhysicalScales:
    return PhysicalScales()


def overlap(psi_a, psi_b, n: int, r_max: float, tol: float = 1e-11) -> float:
    """r^n-weighted overlap of two real radial modes on [0, r_max]."""
    value, _ = integrate(lambda r: r**n * psi_a.sample(r) * psi_b.sample(r), 0.0, r_max, tol)
    return value
