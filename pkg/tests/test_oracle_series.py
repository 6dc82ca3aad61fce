"""Arbitrary-precision series oracle and the reference-table plumbing."""
from __future__ import annotations

import math
import os

import mpmath as mp
import pytest

from radialqm.oracle import (
    SeriesDomainError,
    load_reference_table,
    series_reference,
    write_reference_table,
)

from .conftest import FIXTURE_DIR


def test_values_are_stable_under_extra_digits():
    with mp.workdps(40):
        a = series_reference("bessel_j", 0.0, 1.0, 30)
        b = series_reference("bessel_j", 0.0, 1.0, 40)
        assert abs(a - b) < mp.mpf(10) ** (-29)


def test_half_integer_closed_form_to_25_digits():
    with mp.workdps(35):
        got = series_reference("bessel_i", 0.5, 1.0, 25)
        exact = mp.sqrt(2 / mp.pi) * mp.sinh(1)
        assert abs(got - exact) < mp.mpf(10) ** (-25)


def test_wronskian_closes_to_25_digits():
    with mp.workdps(35):
        w = (series_reference("bessel_k", 0.0, 2.0, 28) * series_reference("bessel_i", 1.0, 2.0, 28)
             + series_reference("bessel_k", 1.0, 2.0, 28) * series_reference("bessel_i", 0.0, 2.0, 28))
        assert abs(w - mp.mpf(1) / 2) < mp.mpf(10) ** (-25)


def test_negative_order_second_kind():
    # connection formulas cover nu < 0: Y_{-3/2} = -J_{3/2} by reflection
    x = 2.0
    got = float(series_reference("bessel_y", -1.5, x, 25))
    exact = -math.sqrt(2.0 / (math.pi * x)) * (math.sin(x) / x - math.cos(x))
    assert got == pytest.approx(exact, rel=1e-13)


def test_domain_errors():
    with pytest.raises(SeriesDomainError):
        series_reference("bessel_j", 0.0, 40.0, 20)
    with pytest.raises(SeriesDomainError):
        series_reference("bessel_j", 0.0, 0.0, 20)
    with pytest.raises(SeriesDomainError):
        series_reference("bessel_q", 0.0, 1.0, 20)
    with pytest.raises(SeriesDomainError):
        series_reference("bessel_j", 0.0, 1.0, 80)


def test_reference_table_round_trips(tmp_path):
    target = tmp_path / "reference.txt"
    write_reference_table(str(target))
    fresh = load_reference_table(str(target))
    frozen = load_reference_table(os.path.join(FIXTURE_DIR, "specfun_reference.txt"))
    assert len(fresh) == len(frozen)
    for a, b in zip(fresh, frozen):
        assert (a.function, a.nu, a.x) == (b.function, b.nu, b.x)
        assert a.value_str == b.value_str
