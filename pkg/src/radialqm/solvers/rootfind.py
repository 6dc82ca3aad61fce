"""Scan-and-bisect root location for smooth one-dimensional residuals.

Grids bracket every sign change at the scan resolution; bisection then
shrinks each bracket to floating-point width, so the reported root is
accurate to a few ulp whenever the residual is continuous.
"""
from __future__ import annotations

import math
from typing import Callable, List, Sequence, Tuple

from ..errors import ComputationError, DomainError

RootRecord = Tuple[float, float, Tuple[float, float]]


def log_grid(lo: float, hi: float, per_decade: int = 512) -> List[float]:
    """Geometric grid from lo to hi with at least per_decade points per decade."""
    if not (0.0 < lo < hi):
        raise DomainError(f"log grid needs 0 < lo < hi, got {lo!r}, {hi!r}")
    span = math.log10(hi / lo)
    count = max(int(math.ceil(span * per_decade)), 8)
    step = math.log(hi / lo) / count
    grid = [lo * math.exp(i * step) for i in range(count)]
    grid.append(hi)
    return grid


def uniform_grid(lo: float, hi: float, max_step: float, min_points: int = 64) -> List[float]:
    """Arithmetic grid from lo to hi with spacing at most max_step."""
    if not (lo < hi):
        raise DomainError(f"uniform grid needs lo < hi, got {lo!r}, {hi!r}")
    if not (max_step > 0.0):
        raise DomainError(f"max_step must be positive, got {max_step!r}")
    count = max(int(math.ceil((hi - lo) / max_step)), min_points)
    step = (hi - lo) / count
    grid = [lo + i * step for i in range(count)]
    grid.append(hi)
    return grid


def bisect(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    f_lo: float,
    f_hi: float,
    max_iter: int = 200,
) -> RootRecord:
    """Shrink a strict sign-change bracket to floating-point resolution."""
    if (f_lo > 0.0) == (f_hi > 0.0) or f_lo == 0.0 or f_hi == 0.0:
        raise ComputationError("bisection needs a strict sign-change bracket")
    a, b, fa, fb = lo, hi, f_lo, f_hi
    for _ in range(max_iter):
        mid = 0.5 * (a + b)
        if not (a < mid < b):
            break
        fm = f(mid)
        if fm == 0.0:
            return mid, 0.0, (a, b)
        if (fm > 0.0) == (fa > 0.0):
            a, fa = mid, fm
        else:
            b, fb = mid, fm
    root, f_root = (a, fa) if abs(fa) <= abs(fb) else (b, fb)
    return root, f_root, (a, b)


def scan_roots(f: Callable[[float], float], grid: Sequence[float]) -> List[RootRecord]:
    """All bracketed roots of f on an increasing grid, bisected to full width."""
    values = [f(x) for x in grid]
    out: List[RootRecord] = []
    for i in range(len(grid) - 1):
        fa, fb = values[i], values[i + 1]
        if fa == 0.0:
            if i == 0 or values[i - 1] != 0.0:
                left = grid[i - 1] if i > 0 else grid[i]
                out.append((grid[i], 0.0, (left, grid[i + 1])))
            continue
        if fb == 0.0:
            continue
        if (fa > 0.0) != (fb > 0.0):
            out.append(bisect(f, grid[i], grid[i + 1], fa, fb))
    if values and values[-1] == 0.0 and (len(values) == 1 or values[-2] != 0.0):
        left = grid[-2] if len(grid) > 1 else grid[-1]
        out.append((grid[-1], 0.0, (left, grid[-1])))
    return out
