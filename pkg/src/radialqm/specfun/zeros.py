"""Positive zeros of the first-kind cylinder functions.

The N-th zero is located by a miss-proof bracket scan and polished by
Newton iterations with a bisection fallback.  The scan starts below the
first zero (the ascending series is strictly positive for x < 2 sqrt(nu+1),
so no zero can hide there) and advances in unit steps; consecutive zeros of
any cylinder function of order >= -1/2 are more than 2.8 apart beyond that
point, so a unit step can never straddle two sign changes.  A large-order
phase estimate only sizes the initial hop, never replaces the bracketing.
"""
from __future__ import annotations

import math

from ..errors import ComputationError, DomainError
from .bessel_jy import bessel_j

_STEP = 1.0


def _j(nu: float, x: float) -> float:
    return bessel_j(nu, x).value


def _j_prime(nu: float, x: float) -> float:
    return (nu / x) * _j(nu, x) - _j(nu + 1.0, x)


def _first_zero_floor(nu: float) -> float:
    # J_nu > 0 strictly below 2 sqrt(nu+1): alternating series with
    # decreasing terms there
    return max(2.0 * math.sqrt(nu + 1.0) - 0.25 * _STEP, 0.9)


def _refine(nu: float, lo: float, hi: float) -> float:
    f_lo = _j(nu, lo)
    for _ in range(90):
        mid = 0.5 * (lo + hi)
        f_mid = _j(nu, mid)
        if f_mid == 0.0:
            lo = hi = mid
            break
        if (f_lo > 0.0) != (f_mid > 0.0):
            hi = mid
        else:
            lo, f_lo = mid, f_mid
        if hi - lo < 1e-5 * (1.0 + lo):
            break
    root = 0.5 * (lo + hi)
    for _ in range(60):
        f = _j(nu, root)
        fp = _j_prime(nu, root)
        if fp == 0.0:
            break
        step = f / fp
        candidate = root - step
        if not lo <= candidate <= hi:
            # fall back to bisection inside the bracket
            f_lo = _j(nu, lo)
            mid = 0.5 * (lo + hi)
            if (f_lo > 0.0) != (_j(nu, mid) > 0.0):
                hi = mid
            else:
                lo = mid
            candidate = 0.5 * (lo + hi)
        if abs(candidate - root) <= 4e-16 * candidate:
            return candidate
        root = candidate
    return root


def bessel_j_zero(nu: float, N: int) -> float:
    """The N-th positive zero of J_nu, N >= 1, to ~1e-14 relative."""
    nu = float(nu)
    if not math.isfinite(nu) or nu < -0.5 - 1e-12:
        raise DomainError(f"order must be >= -1/2, got {nu!r}")
    if int(N) != N or N < 1:
        raise DomainError(f"zero index must be an integer >= 1, got {N!r}")
    N = int(N)
    x = _first_zero_floor(nu)
    f_prev = _j(nu, x)
    found = 0
    limit = x + (N + 2) * (math.pi + 3.0) + 2.0 * max(nu, 0.0) ** (1.0 / 1.0)
    while x < limit + 10.0 * N:
        x_next = x + _STEP
        f_next = _j(nu, x_next)
        if f_next == 0.0:
            found += 1
            if found == N:
                return x_next
            x, f_prev = x_next + 1e-9, _j(nu, x_next + 1e-9)
            continue
        if (f_prev > 0.0) != (f_next > 0.0):
            found += 1
            if found == N:
                return _refine(nu, x, x_next)
        x, f_prev = x_next, f_next
    raise ComputationError(f"failed to locate zero {N} of order {nu}")
