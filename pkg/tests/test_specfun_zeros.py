"""Positive zeros of the regular cylinder function."""
from __future__ import annotations

import math

import pytest

from radialqm.errors import DomainError
from radialqm.specfun import bessel_j, bessel_j_zero


def test_first_zero_of_order_zero():
    assert bessel_j_zero(0.0, 1) == pytest.approx(2.404825557695773, abs=1e-12)


def test_half_integer_zeros_are_multiples_of_pi():
    for N in range(1, 9):
        assert bessel_j_zero(0.5, N) == pytest.approx(N * math.pi, rel=1e-13)
        assert bessel_j_zero(-0.5, N) == pytest.approx((N - 0.5) * math.pi, rel=1e-13)


@pytest.mark.parametrize("nu", [0.0, 0.5, 1.0, 2.5, 7.0, 31.5])
def test_zeros_are_roots(nu):
    for N in (1, 2, 5, 11):
        z = bessel_j_zero(nu, N)
        # |J'| is O(1/sqrt(z)) at a zero, so the residual scale follows
        assert abs(bessel_j(nu, z).value) < 1e-12 * max(1.0, z)


def test_zeros_increase_and_interlace():
    for nu in (0.0, 1.0, 3.5):
        z = [bessel_j_zero(nu, N) for N in range(1, 8)]
        z_up = [bessel_j_zero(nu + 1.0, N) for N in range(1, 8)]
        assert all(a < b for a, b in zip(z, z[1:]))
        # j_{nu,N} < j_{nu+1,N} < j_{nu,N+1}
        for N in range(6):
            assert z[N] < z_up[N] < z[N + 1]


def test_zero_spacing_approaches_pi():
    # gap excess decays like (4 nu^2 - 1) pi / (8 j^2); measured
    # 3.51e-4 and 8.8e-5 at N = 40 and 80 for nu = 2
    gaps = [bessel_j_zero(2.0, N + 1) - bessel_j_zero(2.0, N) for N in (40, 80)]
    assert abs(gaps[0] - math.pi) < 5e-4
    assert abs(gaps[1] - math.pi) < 1.3e-4
    assert abs(gaps[1] - math.pi) < abs(gaps[0] - math.pi)


def test_zero_domain_validation():
    with pytest.raises(DomainError):
        bessel_j_zero(0.5, 0)
    with pytest.raises(DomainError):
        bessel_j_zero(0.5, -3)
    with pytest.raises(DomainError):
        bessel_j_zero(-0.6, 1)
