"""Hand-rolled special functions for radial quantum problems.

Every evaluator returns an :class:`EvalResult` carrying the value and a
running absolute-error estimate, except the orthogonal polynomials and
zero finder, whose recurrences are exact enough to return plain floats.
"""

from .bessel_ik import bessel_i, bessel_k
from .bessel_jy import bessel_j, bessel_y, hankel
from .gammafn import gamma_fn
from .hyper import (
    hermite,
    hermite_derivative,
    kummer_m,
    kummer_u,
    laguerre,
    laguerre_derivative,
)
from .order import Order
from .result import EvalResult
from .zeros import bessel_j_zero

__all__ = [
    "Order",
    "EvalResult",
    "bessel_j",
    "bessel_y",
    "bessel_i",
    "bessel_k",
    "hankel",
    "bessel_j_zero",
    "gamma_fn",
    "kummer_m",
    "kummer_u",
    "hermite",
    "laguerre",
    "hermite_derivative",
    "laguerre_derivative",
]
