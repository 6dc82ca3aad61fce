"""Cylinder functions of the first and second kind, real order nu >= -1/2.

Three regimes:

* ascending series for the first kind at small argument (x <= 2, or
  x^2 <= 4(nu+1) where the series has no destructive cancellation), with
  the companion small-x series for the second kind at the fractional base
  order followed by the stable upward order recurrence;
* continued fractions at intermediate argument: the ratio J'/J at the
  target order (with sign tracking), a backward order sweep to the base
  order in [-1/2, 1/2), the complex continued fraction for the outgoing
  combination at the base order, and the Wronskian to fix magnitudes;
* the large-argument amplitude-phase expansions once they converge to
  double precision, x >= max(60, (nu+1)^2/2 + 20).

Everything is computed here from recurrences and series; no library Bessel
routines are involved anywhere in the package.
"""
from __future__ import annotations

import math

from ..errors import ComputationError, DomainError
from ._temme import gamma_pair_small
from .gammafn import gamma_fn
from .result import EvalResult, overflow_result

_EPS = 2.2e-16
_TINY = 1e-290
_SEED = 1e-30
_RESCALE = 1e250
_MAX_SERIES = 600
_MAX_CF = 40000


def _series_region(nu: float, x: float) -> bool:
    return x <= 2.0 or x * x <= 4.0 * (nu + 1.0)


def _asym_region(nu: float, x: float) -> bool:
    top = nu + 1.0
    return x >= max(60.0, 0.5 * top * top + 20.0)


def _j_series(nu: float, x: float):
    """(J_nu, J'_nu, est_abs_error) by the ascending series; x > 0."""
    g = gamma_fn(nu + 1.0)
    seed = (0.5 * x) ** nu / g.value
    if seed == 0.0:
        # below the double range; the derivative is equally negligible
        return 0.0, 0.0, 5e-324
    z = 0.25 * x * x
    terms = [seed]
    dterms = [seed * nu / x]
    t = seed
    peak = abs(seed)
    for k in range(_MAX_SERIES):
        t *= -z / ((k + 1.0) * (nu + k + 1.0))
        terms.append(t)
        dterms.append(t * (nu + 2.0 * (k + 1.0)) / x)
        peak = max(peak, abs(t))
        if abs(t) < 1e-18 * peak and k >= 2:
            break
    else:
        raise ComputationError("first-kind series did not converge")
    value = math.fsum(terms)
    deriv = math.fsum(dterms)
    est = 2.0 * _EPS * (peak + abs(value))
    return value, deriv, est


def _temme_y(mu: float, x: float):
    """(Y_mu, Y_{mu+1}) for |mu| <= 1/2 and 0 < x <= 2, by the small-x series."""
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
    half_pimu = 0.5 * pimu
    if abs(mu) < 1e-8:
        e_factor = mu * (math.pi * math.pi / 2.0) * (1.0 - half_pimu * half_pimu / 3.0)
    else:
        s = math.sin(half_pimu)
        e_factor = 2.0 / mu * s * s
    z = 0.25 * x * x
    c = 1.0
    g = f + e_factor * q
    h = p
    sum_y = c * g
    sum_y1 = c * h
    for k in range(1, _MAX_SERIES):
        f = (k * f + p + q) / (k * k - mu * mu)
        p /= k - mu
        q /= k + mu
        g = f + e_factor * q
        h = p - k * g
        c *= -z / k
        sum_y += c * g
        sum_y1 += c * h
        if abs(c) * (abs(g) + abs(h)) < 1e-17 * (abs(sum_y) + abs(sum_y1)):
            break
    else:
        raise ComputationError("second-kind small-x series did not converge")
    y_mu = -(2.0 / math.pi) * sum_y
    y_mu1 = -(4.0 / (math.pi * x)) * sum_y1
    return y_mu, y_mu1


def _cf1(nu: float, x: float):
    """J'_nu/J_nu by continued fraction; also the sign of J_nu(x)."""
    f = nu / x
    if abs(f) < _TINY:
        f = _TINY
    b = 2.0 * nu / x
    c = f
    d = 0.0
    isign = 1
    for _ in range(_MAX_CF):
        b += 2.0 / x
        d = b - d
        if abs(d) < _TINY:
            d = _TINY
        c = b - 1.0 / c
        if abs(c) < _TINY:
            c = _TINY
        d = 1.0 / d
        delta = c * d
        f *= delta
        if d < 0.0:
            isign = -isign
        if abs(delta - 1.0) < 4e-16:
            return f, isign
    raise ComputationError("ratio continued fraction did not converge")


def _cf2(mu: float, x: float):
    """(p, q) with H'(x)/H(x) = p + iq at order |mu| <= 1/2, x > 2."""
    base = complex(-0.5 / x, 1.0)
    f = complex(_SEED, 0.0)
    c = f
    d = complex(0.0, 0.0)
    a = 0.25 - mu * mu
    for k in range(1, _MAX_CF):
        bk = complex(2.0 * x, 2.0 * k)
        d = bk + a * d
        if abs(d) < _TINY:
            d = complex(_TINY, 0.0)
        c = bk + a / c
        if abs(c) < _TINY:
            c = complex(_TINY, 0.0)
        d = 1.0 / d
        delta = c * d
        f *= delta
        if abs(delta - 1.0) < 4e-16:
            pq = base + complex(0.0, 1.0 / x) * f
            return pq.real, pq.imag
        a += 2.0 * k
    raise ComputationError("outgoing continued fraction did not converge")


def _asym_single(nu: float, x: float):
    """(J_nu, Y_nu, est) from the amplitude-phase expansion; x in asym region."""
    mu4 = 4.0 * nu * nu
    t = 1.0
    p_sum = 1.0
    q_sum = 0.0
    last = 1.0
    for k in range(1, 40):
        t *= (mu4 - (2.0 * k - 1.0) ** 2) / (8.0 * k * x)
        if abs(t) >= last:
            break
        last = abs(t)
        quarter = k % 4
        signed = t if quarter in (0, 1) else -t
        if k % 2 == 0:
            p_sum += signed
        else:
            q_sum += signed
        if abs(t) < 1e-17:
            break
    chi = x - (0.5 * nu + 0.25) * math.pi
    cos_chi = math.cos(chi)
    sin_chi = math.sin(chi)
    amp = math.sqrt(2.0 / (math.pi * x))
    j = amp * (p_sum * cos_chi - q_sum * sin_chi)
    y = amp * (p_sum * sin_chi + q_sum * cos_chi)
    est = amp * (last * 1e-16 + abs(t) + 1.2e-16 * x)
    return j, y, est


def _recur_y_up(mu: float, x: float, y0: float, y1: float, steps: int):
    """(Y_{mu+steps}, Y_{mu+steps+1}) by the stable upward recurrence."""
    for m in range(1, steps + 1):
        y0, y1 = y1, (2.0 * (mu + m) / x) * y1 - y0
        if not math.isfinite(y1):
            return y0, y1
    return y0, y1


def _engine(nu: float, x: float):
    """(J, J', Y, Y', est_j, est_y) for nu >= -1/2, x > 0."""
    if _asym_region(nu, x):
        j, y, est = _asym_single(nu, x)
        j1, y1, est1 = _asym_single(nu + 1.0, x)
        jp = (nu / x) * j - j1
        yp = (nu / x) * y - y1
        return j, jp, y, yp, est + est1, est + est1

    nl = int(nu + 0.5)
    mu = nu - nl

    if x <= 2.0:
        j, jp, est_j = _j_series(nu, x)
        y_mu, y_mu1 = _temme_y(mu, x)
        y, y_next = _recur_y_up(mu, x, y_mu, y_mu1, nl)
        if not (math.isfinite(y) and math.isfinite(y_next)):
            return j, jp, math.inf, math.inf, est_j, math.inf
        yp = (nu / x) * y - y_next
        est_y = abs(y) * 1e-14 + abs(y_next) * 1e-15
        return j, jp, y, yp, est_j, est_y

    # continued-fraction regime, 2 < x < asymptotic threshold
    f_nu, isign = _cf1(nu, x)
    rj = isign * _SEED
    rjp = f_nu * rj
    resc = 1.0
    for m in range(nl, 0, -1):
        order = mu + m
        rj_lower = (order / x) * rj + rjp
        rjp_lower = ((order - 1.0) / x) * rj_lower - rj
        rj, rjp = rj_lower, rjp_lower
        if abs(rj) > _RESCALE:
            rj /= _RESCALE
            rjp /= _RESCALE
            resc /= _RESCALE
    f_mu = rjp / rj
    p, q = _cf2(mu, x)
    w = 2.0 / (math.pi * x)
    gam = (p - f_mu) / q
    j_mu = math.copysign(math.sqrt(w / (q + gam * (p - f_mu))), rj)
    y_mu = gam * j_mu
    yp_mu = q * j_mu + p * y_mu
    y_mu1 = (mu / x) * y_mu - yp_mu

    j_nu = j_mu * (isign * _SEED) * resc / rj
    jp_nu = f_nu * j_nu

    if _series_region(nu, x):
        # the ascending series is cleaner for J there; keep its value
        j_nu, jp_nu, _ = _j_series(nu, x)

    y, y_next = _recur_y_up(mu, x, y_mu, y_mu1, nl)
    if not (math.isfinite(y) and math.isfinite(y_next)):
        return j_nu, jp_nu, math.inf, math.inf, abs(j_nu) * 1e-14, math.inf
    yp = (nu / x) * y - y_next
    return j_nu, jp_nu, y, yp, abs(j_nu) * 1e-14, abs(y) * 1e-14


def _check_order(nu: float) -> float:
    nu = float(nu)
    if not math.isfinite(nu) or nu < -0.5 - 1e-12:
        raise DomainError(f"order must be finite and >= -1/2, got {nu!r}")
    return nu


def bessel_j(nu: float, x: float) -> EvalResult:
    """J_nu(x) for nu >= -1/2, x >= 0."""
    nu = _check_order(nu)
    x = float(x)
    if not math.isfinite(x) or x < 0.0:
        raise DomainError(f"bessel_j requires x >= 0, got {x!r}")
    if x == 0.0:
        if nu == 0.0:
            return EvalResult(1.0, _EPS)
        if nu > 0.0:
            return EvalResult(0.0, 0.0)
        return overflow_result()
    if _series_region(nu, x):
        value, _, est = _j_series(nu, x)
        return EvalResult(value, est)
    j, _, _, _, est_j, _ = _engine(nu, x)
    return EvalResult(j, est_j)


def bessel_y(nu: float, x: float) -> EvalResult:
    """Y_nu(x) for nu >= -1/2, x > 0."""
    nu = _check_order(nu)
    x = float(x)
    if not math.isfinite(x) or x <= 0.0:
        raise DomainError(f"bessel_y requires x > 0, got {x!r}")
    _, _, y, _, _, est_y = _engine(nu, x)
    if not math.isfinite(y):
        return overflow_result(math.copysign(math.inf, y))
    return EvalResult(y, est_y)


def hankel(kind: int, nu: float, x: float) -> EvalResult:
    """H^(kind)_nu(x) = J_nu(x) +/- i Y_nu(x) for kind 1 / 2."""
    if kind not in (1, 2):
        raise DomainError(f"hankel kind must be 1 or 2, got {kind!r}")
    nu = _check_order(nu)
    x = float(x)
    if not math.isfinite(x) or x <= 0.0:
        raise DomainError(f"hankel requires x > 0, got {x!r}")
    j, _, y, _, est_j, est_y = _engine(nu, x)
    value = complex(j, y if kind == 1 else -y)
    return EvalResult(value, est_j + est_y)
