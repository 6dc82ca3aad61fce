"""Modified cylinder functions of real order nu >= -1/2.

The first kind comes from its ascending series everywhere (all terms are
positive, so the series is cancellation-free at any argument the double
range can hold).  The second kind is built at the fractional base order in
[-1/2, 1/2) by one of three routes -- the small-x companion series (x <= 2),
a trapezoidal evaluation of the decaying integral representation
(2 < x < 20), or the large-argument expansion (x >= 20) -- and then carried
up in order by the stable upward recurrence.  The second-kind internals work
on the e^{+x}-scaled function so deep exponential decay cannot underflow
before the final unscaling; the scaled form also feeds the solvers that
need ratios at large argument.
"""
from __future__ import annotations

import math

from ..errors import ComputationError, DomainError
from ._temme import gamma_pair_small
from .gammafn import gamma_fn
from .result import EvalResult, overflow_result

_EPS = 2.2e-16
_MAX_SERIES = 2600


def _i_series(nu: float, x: float):
    """(I_nu, I'_nu, est) by the ascending series; x > 0."""
    g = gamma_fn(nu + 1.0)
    seed = (0.5 * x) ** nu / g.value
    if seed == 0.0:
        return 0.0, 0.0, 5e-324
    z = 0.25 * x * x
    terms = [seed]
    dterms = [seed * nu / x]
    t = seed
    for k in range(_MAX_SERIES):
        t *= z / ((k + 1.0) * (nu + k + 1.0))
        if math.isinf(t):
            return math.inf, math.inf, math.inf
        terms.append(t)
        dterms.append(t * (nu + 2.0 * (k + 1.0)) / x)
        if t < 1e-18 * terms[0] or (k > z and t < 1e-18 * max(terms)):
            break
    else:
        raise ComputationError("modified series did not converge")
    value = math.fsum(terms)
    deriv = math.fsum(dterms)
    if math.isinf(value):
        return math.inf, math.inf, math.inf
    return value, deriv, 2.0 * _EPS * value


def _temme_k_scaled(mu: float, x: float):
    """(e^x K_mu, e^x K_{mu+1}) for |mu| <= 1/2, 0 < x <= 2."""
    g1, g2, rg_plus, rg_minus = gamma_pair_small(mu)
    ln2x = math.log(2.0 / x)
    sigma = mu * ln2x
    sinhc = (
        1.0 + sigma * sigma / 6.0 * (1.0 + sigma * sigma / 20.0)
        if abs(sigma) < 1e-5
        else math.sinh(sigma) / sigma
    )
    pimu = math.pi * mu
    fact = 1.0 if abs(pimu) < 1e-15 else pimu / math.sin(pimu)
    half_x_mu = (0.5 * x) ** mu
    f = fact * (g1 * math.cosh(sigma) + g2 * ln2x * sinhc)
    p = 0.5 / (half_x_mu * rg_plus)
    q = 0.5 * half_x_mu / rg_minus
    z = 0.25 * x * x
    d = 1.0
    sum_k = f
    sum_k1 = p
    for k in range(1, _MAX_SERIES):
        f = (k * f + p + q) / (k * k - mu * mu)
        p /= k - mu
        q /= k + mu
        d *= z / k
        sum_k += d * f
        sum_k1 += d * (p - k * f)
        if d * (abs(f) + abs(p)) < 1e-17 * (abs(sum_k) + abs(sum_k1)):
            break
    else:
        raise ComputationError("second-kind modified series did not converge")
    scale = math.exp(x)
    return scale * sum_k, scale * (2.0 / x) * sum_k1


def _quad_k_scaled(mu: float, x: float):
    """e^x K_mu by the trapezoidal rule on the integral representation.

    Integrand e^{-x(cosh t - 1)} cosh(mu t) decays doubly-exponentially;
    step 0.17 puts the discretization error far below double precision
    for the range 2 < x < 20 where this route is used.
    """
    h = 0.17
    total = 0.5  # t = 0 contributes cosh(0) = 1 with trapezoid half-weight
    k = 1
    while True:
        t = k * h
        expo = x * (math.cosh(t) - 1.0)
        if expo > 45.0:
            break
        total += math.exp(-expo) * math.cosh(mu * t)
        k += 1
        if k > 4000:
            raise ComputationError("integral tail did not close")
    return total * h


def _asym_k_scaled(mu: float, x: float):
    """e^x K_mu by the large-argument expansion, x >= 20."""
    mu4 = 4.0 * mu * mu
    t = 1.0
    total = 1.0
    for k in range(1, 40):
        t *= (mu4 - (2.0 * k - 1.0) ** 2) / (8.0 * k * x)
        total += t
        if abs(t) < 1e-18:
            break
    return math.sqrt(math.pi / (2.0 * x)) * total


def _k_scaled_base(mu: float, x: float):
    """(e^x K_mu, e^x K_{mu+1}) at the base order."""
    if x <= 2.0:
        return _temme_k_scaled(mu, x)
    if x < 20.0:
        k0 = _quad_k_scaled(mu, x)
        k1 = _quad_k_scaled(mu + 1.0, x)
        return k0, k1
    k0 = _asym_k_scaled(mu, x)
    k1 = _asym_k_scaled(mu + 1.0, x)
    return k0, k1


def _k_scaled_engine(nu: float, x: float):
    """(e^x K_nu, e^x K_{nu+1}, est_rel) for nu >= -1/2, x > 0."""
    nl = int(nu + 0.5)
    mu = nu - nl
    k0, k1 = _k_scaled_base(mu, x)
    for m in range(1, nl + 1):
        k0, k1 = k1, (2.0 * (mu + m) / x) * k1 + k0
        if math.isinf(k1):
            return k0, k1, math.inf
    return k0, k1, 4e-15


def _check_order(nu: float) -> float:
    nu = float(nu)
    if not math.isfinite(nu) or nu < -0.5 - 1e-12:
        raise DomainError(f"order must be finite and >= -1/2, got {nu!r}")
    return nu


def bessel_i(nu: float, x: float) -> EvalResult:
    """I_nu(x) for nu >= -1/2, x >= 0; overflow is flagged, not raised."""
    nu = _check_order(nu)
    x = float(x)
    if not math.isfinite(x) or x < 0.0:
        raise DomainError(f"bessel_i requires x >= 0, got {x!r}")
    if x == 0.0:
        if nu == 0.0:
            return EvalResult(1.0, _EPS)
        if nu > 0.0:
            return EvalResult(0.0, 0.0)
        return overflow_result()
    value, _, est = _i_series(nu, x)
    if math.isinf(value):
        return overflow_result()
    return EvalResult(value, est)


def bessel_k(nu: float, x: float) -> EvalResult:
    """K_nu(x) for nu >= -1/2, x > 0."""
    nu = _check_order(nu)
    x = float(x)
    if not math.isfinite(x) or x <= 0.0:
        raise DomainError(f"bessel_k requires x > 0, got {x!r}")
    k_nu, _, rel = _k_scaled_engine(nu, x)
    if math.isinf(k_nu) or math.isinf(rel):
        return overflow_result()
    value = k_nu * math.exp(-x)
    return EvalResult(value, abs(value) * rel + 5e-324)


def scaled_bessel_k(nu: float, x: float) -> EvalResult:
    """e^x K_nu(x): internal helper for deep-decay ratios (not public API)."""
    nu = _check_order(nu)
    x = float(x)
    if not math.isfinite(x) or x <= 0.0:
        raise DomainError(f"scaled_bessel_k requires x > 0, got {x!r}")
    k_nu, _, rel = _k_scaled_engine(nu, x)
    if math.isinf(k_nu) or math.isinf(rel):
        return overflow_result()
    return EvalResult(k_nu, abs(k_nu) * rel)


def scaled_bessel_i(nu: float, x: float) -> EvalResult:
    """e^{-x} I_nu(x): pairs with scaled_bessel_k where I alone overflows."""
    nu = _check_order(nu)
    x = float(x)
    if not math.isfinite(x) or x < 0.0:
        raise DomainError(f"scaled_bessel_i requires x >= 0, got {x!r}")
    if x == 0.0:
        if nu == 0.0:
            return EvalResult(1.0, _EPS)
        if nu > 0.0:
            return EvalResult(0.0, 0.0)
        return overflow_result()
    if x <= 600.0:
        # series value stays inside double range up to x ~ 700
        value, _, est = _i_series(nu, x)
        damp = math.exp(-x)
        scaled = value * damp
        return EvalResult(scaled, est * damp + 2.0 * _EPS * abs(scaled))
    mu4 = 4.0 * nu * nu
    term = 1.0
    total = 1.0
    for k in range(1, 60):
        term *= -(mu4 - (2.0 * k - 1.0) ** 2) / (8.0 * k * x)
        total += term
        if abs(term) < 1e-18 * abs(total):
            break
    else:
        raise ComputationError("modified large-argument expansion stalled")
    value = total / math.sqrt(2.0 * math.pi * x)
    return EvalResult(value, abs(value) * 1e-14)
