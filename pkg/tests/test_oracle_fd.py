"""Finite-difference and shooting oracles checked against closed forms."""
from __future__ import annotations

import math

import pytest

from radialqm.errors import DomainError, MatchingError
from radialqm.oracle import Grid, fd_bound_spectrum, fd_scattering, shooting_bound_levels
from radialqm.oracle.fd import _delta_width_energies
from radialqm.radial import Dimension, PhysicalScales
from radialqm.radial.model import DeltaShell, FiniteWell, Free, Harmonic, InfiniteWell
from radialqm.solvers import delta_scattering, finite_well_scattering
from radialqm.specfun import bessel_j_zero


def test_grid_validation():
    with pytest.raises(DomainError):
        Grid(0.0, 1.0, 50)
    with pytest.raises(DomainError):
        Grid(0.0, -1.0, 500)
    with pytest.raises(DomainError):
        Grid(2.0, 1.0, 500)


def test_box_eigenvalue_against_closed_form(scales):
    got = fd_bound_spectrum(Dimension(2), InfiniteWell(1.0), Grid(0.0, 1.0, 4000), 1, scales)
    assert abs(got[0].eps - math.pi**2) / math.pi**2 < 2e-5


def test_box_grid_must_end_at_the_wall(scales):
    with pytest.raises(DomainError):
        fd_bound_spectrum(Dimension(2), InfiniteWell(1.0), Grid(0.0, 2.0, 1000), 1, scales)


def test_oscillator_eigenvalues_against_ladder(scales):
    got = fd_bound_spectrum(Dimension(2), Harmonic(1.0), Grid(0.0, 8.0, 16000), 2, scales)
    for k, lv in enumerate(got):
        exact = 2.0 * (2 * k + 1.5)
        assert abs(lv.eps - exact) / exact < 2e-5


def test_grid_halving_cuts_the_error_by_at_least_three(scales):
    # second-order stencil: the observed factor is 4
    coarse = fd_bound_spectrum(Dimension(1), Harmonic(1.0), Grid(0.0, 9.0, 1500), 2, scales)
    fine = fd_bound_spectrum(Dimension(1), Harmonic(1.0), Grid(0.0, 9.0, 3000), 2, scales)
    for k, exact in ((0, 2.0), (1, 6.0)):
        ratio = abs(coarse[k].eps - exact) / abs(fine[k].eps - exact)
        assert ratio >= 3.0


def test_shell_width_sequence_is_monotone_and_richardson_consistent(scales):
    solver_eps = -8.954760672448813
    c, m, f = _delta_width_energies(
        Dimension(2), DeltaShell(3.0, -1, 1.0), Grid(0.0, 3.0, 4000), 1, scales)
    seq = (c[0], m[0], f[0])
    assert seq[0] > seq[1] > seq[2]
    rich = (4.0 * (2.0 * f[0] - m[0]) - (2.0 * m[0] - c[0])) / 3.0
    assert abs(rich - solver_eps) < abs(f[0] - solver_eps)


def test_regularized_shell_spectrum(scales):
    got = fd_bound_spectrum(Dimension(0), DeltaShell(25.0, -1, 1.0), Grid(0.0, 1.6, 6000), 1, scales)
    assert got[0].E < 0.0
    assert got[0].eps == pytest.approx(625.0, rel=2e-3)


def test_level_count_validation(scales):
    with pytest.raises(DomainError):
        fd_bound_spectrum(Dimension(1), Harmonic(1.0), Grid(0.0, 8.0, 400), 0, scales)
    with pytest.raises(DomainError):
        fd_bound_spectrum(Dimension(1), Harmonic(1.0), Grid(0.0, 8.0, 400), 300, scales)


@pytest.mark.parametrize("n", range(4))
def test_free_sweep_recovers_intensity_four(n, scales):
    got = fd_scattering(Dimension(n), Free(), 2.0, Grid(0.0, 2.5, 100), scales)
    assert abs(got.interior_intensity - 4.0) < 1e-8
    assert abs(got.exterior_reflection - 1.0) < 1e-8


def test_sweep_matches_shell_solver(scales):
    closed = delta_scattering(Dimension(1), 1.5, 1.0, 5.0, scales)
    swept = fd_scattering(Dimension(1), DeltaShell(0.75, 1, 1.0), 5.0, Grid(0.0, 2.5, 100), scales)
    assert abs(closed.interior_intensity - swept.interior_intensity) < 1e-6


def test_sweep_matches_well_solver(scales):
    closed = finite_well_scattering(Dimension(2), 5.0, 1.0, 2.0, scales)
    swept = fd_scattering(Dimension(2), FiniteWell(5.0, 1.0), 2.0, Grid(0.0, 2.5, 100), scales)
    assert abs(closed.interior_intensity - swept.interior_intensity) < 1e-6


def test_sweep_error_paths(scales):
    with pytest.raises(MatchingError):
        fd_scattering(Dimension(1), DeltaShell(0.75, 1, 1.0), 5.0, Grid(0.0, 0.8, 100), scales)
    with pytest.raises(DomainError):
        fd_scattering(Dimension(1), Free(), 900.0, Grid(0.0, 2.5, 100), scales)
    with pytest.raises(DomainError):
        fd_scattering(Dimension(1), Free(), -1.0, Grid(0.0, 2.5, 100), scales)
    with pytest.raises(DomainError):
        fd_scattering(Dimension(1), InfiniteWell(1.0), 2.0, Grid(0.0, 2.5, 100), scales)


def test_shooting_confirms_oscillator(scales):
    got = shooting_bound_levels(Dimension(1), Harmonic(1.0), 7.0, 0.5, 7.5, scales)
    assert len(got) == 2
    for value, exact in zip(got, (2.0, 6.0)):
        assert abs(value - exact) / exact < 1e-6


def test_shooting_confirms_finite_well(scales):
    got = shooting_bound_levels(Dimension(2), FiniteWell(18.0, 1.0), 3.0, -32.0, -2.0, scales)
    assert len(got) == 2
    for value, exact in zip(got, (-28.82412105776268, -8.689305179835998)):
        assert abs(value - exact) / abs(exact) < 1e-5


def test_shooting_validation(scales):
    with pytest.raises(DomainError):
        shooting_bound_levels(Dimension(1), Harmonic(1.0), -1.0, 0.5, 7.5, scales)
    with pytest.raises(DomainError):
        shooting_bound_levels(Dimension(1), Harmonic(1.0), 7.0, 7.5, 0.5, scales)
