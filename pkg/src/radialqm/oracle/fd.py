"""Finite-difference reference spectra and scattering coefficients.

Everything here recomputes observables from the radial equation itself:
a symmetric three-point discretization for spectra, and a Runge-Kutta
sweep matched to cylinder-function asymptotics for scattering.  The
cylinder values needed at the matching radius come from the
arbitrary-precision series in this package, never from the production
kernel, so the two paths share no numerics.

Both routines work on the reduced profile u(r) = r^nu * Psi(r), which
turns every problem into

    -u'' - (1/r) u' + (nu^2 / r^2 + v(r)) u = eps u

independent of the number of angular dimensions.  For n = 0 the profile
u carries an r^(-1/2) factor, so the spectrum code switches to the
equivalent half-line form in Psi itself (nu^2 - 1/4 vanishes there).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.linalg import eigh_tridiagonal

from ..errors import ComputationError, DomainError, MatchingError
from ..radial.model import (
    DeltaShell,
    Dimension,
    EnergyLevel,
    FiniteWell,
    Free,
    Harmonic,
    InfiniteWell,
    PhysicalScales,
    Potential,
)
from ..solvers.results import ScatteringResult
from .series import series_reference

__all__ = ["Grid", "fd_bound_spectrum", "fd_scattering", "shooting_bound_levels"]

# Ascending-series reference is only trusted up to this argument.
_SERIES_CAP = 30.0


@dataclass(frozen=True)
class Grid:
    """Uniform radial mesh for the finite-difference routines.

    ``r_min`` is the lower edge of the first cell (0 is allowed and is
    the usual choice; cell centers sit half a spacing inside).  Spectrum
    assembly places a Dirichlet wall at ``r_max``.
    """

    r_min: float
    r_max: float
    points: int

    def __post_init__(self) -> None:
        if not (self.r_min >= 0.0 and math.isfinite(self.r_min)):
            raise DomainError(f"grid r_min must be >= 0 and finite, got {self.r_min!r}")
        if not (self.r_max > self.r_min and math.isfinite(self.r_max)):
            raise DomainError(f"grid r_max must exceed r_min, got {self.r_max!r}")
        if int(self.points) != self.points or self.points < 100:
            raise DomainError(f"grid needs at least 100 points, got {self.points!r}")

    @property
    def spacing(self) -> float:
        return (self.r_max - self.r_min) / self.points

    def centers(self) -> np.ndarray:
        h = self.spacing
        return self.r_min + (np.arange(self.points) + 0.5) * h


def _smooth_profile(pot: Potential, scales: PhysicalScales, r: np.ndarray, edges: np.ndarray) -> np.ndarray:
    """Reduced potential sampled at cell centers; shell handled separately."""
    v = np.zeros_like(r)
    if isinstance(pot, Harmonic):
        mu = scales.oscillator_scale(pot.omega)
        v = (mu * mu) * r * r
    elif isinstance(pot, FiniteWell):
        v0 = scales.reduced_potential(pot.V0)
        # volume fraction of each cell below the step keeps the O(h^2) constant small
        h = edges[1] - edges[0]
        fill = np.clip((pot.R - edges[:-1]) / h, 0.0, 1.0)
        v = -v0 * fill
    elif isinstance(pot, (InfiniteWell, Free, DeltaShell)):
        pass
    else:
        raise DomainError(f"unsupported potential {pot!r}")
    return v


def _shell_samples(
    gamma_signed: float, R: float, width: float, r: np.ndarray, h: float, weights: np.ndarray
) -> np.ndarray:
    """Narrow normalized Gaussian whose discrete weighted mass is exact.

    ``weights`` is the quadrature weight of each node in the inner
    product the matrix is symmetric under (r * h on the profile grid,
    h on the half-line grid); the samples are scaled so the discrete
    replacement reproduces the shell's jump strength exactly.
    """
    g = np.exp(-0.5 * ((r - R) / width) ** 2)
    mass = float(np.sum(g * weights))
    if mass <= 0.0:
        raise ComputationError("shell regularization missed every grid cell")
    return gamma_signed * g / mass


def _assemble(
    dim: Dimension, pot: Potential, grid: Grid, scales: PhysicalScales, shell_width: float | None
) -> tuple[np.ndarray, np.ndarray]:
    """Symmetric tridiagonal (diagonal, off-diagonal) for the chosen grid."""
    h = grid.spacing
    r = grid.centers()
    edges = grid.r_min + np.arange(grid.points + 1) * h
    v = _smooth_profile(pot, scales, r, edges)

    if isinstance(pot, DeltaShell):
        if not grid.r_min < pot.R < grid.r_max:
            raise DomainError("shell radius must lie inside the grid")
        gamma_signed = pot.sign * scales.reduced_coupling(pot.g)
        width = 3.0 * h if shell_width is None else shell_width
        if dim.n == 0:
            weights = np.full_like(r, h)
        else:
            weights = r * h / pot.R
        v = v + _shell_samples(gamma_signed, pot.R, width, r, h, weights)

    if dim.n == 0:
        # half-line form in Psi: -Psi'' + v Psi = eps Psi, even at the origin
        if grid.r_min != 0.0:
            raise DomainError("half-line assembly needs r_min = 0")
        diag = np.full(grid.points, 2.0 / h**2) + v
        diag[0] = 1.0 / h**2 + v[0]          # Neumann ghost: Psi(-r) = Psi(r)
        diag[-1] = 3.0 / h**2 + v[-1]        # Dirichlet ghost: zero at the wall edge
        off = np.full(grid.points - 1, -1.0 / h**2)
        return diag, off

    nu = dim.nu
    left = edges[:-1]
    right = edges[1:]
    diag = (left + right) / (h * h * r) + (nu * nu) / (r * r) + v
    if grid.r_min == 0.0:
        # centrifugal weight on the first cell chosen so the row kills the
        # regular power r^nu exactly; midpoint sampling is only first order
        # against the kink of half-integer orders
        diag[0] = right[0] / (h * h * r[0]) + v[0]
        diag[0] += right[0] * ((r[1] / r[0]) ** nu - 1.0) / (h * h * r[0])
    elif nu != 0.0:
        # flux of the regular power through the inner edge, Robin style
        diag[0] += nu * (grid.r_min / r[0]) ** nu / (h * r[0])
    diag[-1] += right[-1] / (h * h * r[-1])  # reflects the wall zero through the edge
    off = -right[:-1] / (h * h * np.sqrt(r[:-1] * r[1:]))
    return diag, off


def _eigenvalues(diag: np.ndarray, off: np.ndarray, count: int) -> np.ndarray:
    return eigh_tridiagonal(
        diag, off, eigvals_only=True, select="i", select_range=(0, count - 1)
    )


def _delta_width_energies(
    dim: Dimension, pot: DeltaShell, grid: Grid, count: int, scales: PhysicalScales
) -> list[np.ndarray]:
    """Eigenvalues for shell widths 4h, 2h, h, coarse to fine."""
    h = grid.spacing
    out = []
    for width in (4.0 * h, 2.0 * h, 1.0 * h):
        diag, off = _assemble(dim, pot, grid, scales, width)
        out.append(_eigenvalues(diag, off, count))
    return out


def fd_bound_spectrum(
    dim: Dimension, pot: Potential, grid: Grid, count: int, scales: PhysicalScales
) -> list[EnergyLevel]:
    """Lowest ``count`` eigenvalues of the discretized reduced operator.

    The shell potential is replaced by narrow normalized Gaussians of
    width 4h, 2h and h and the width dependence is removed by Richardson
    extrapolation; everything else is sampled directly.  Levels come
    back ascending, numbered from 1, negative eigenvalues stored by
    magnitude with the physical energy kept signed.
    """
    if int(count) != count or count < 1:
        raise DomainError(f"level count must be an integer >= 1, got {count!r}")
    if count > grid.points // 2:
        raise DomainError("level count too large for this grid")
    if isinstance(pot, InfiniteWell) and abs(grid.r_max - pot.R) > 1e-9 * pot.R:
        raise DomainError("hard-wall spectra need the grid to end exactly at the wall")

    if isinstance(pot, DeltaShell):
        coarse, mid, fine = _delta_width_energies(dim, pot, grid, count, scales)
        # the profile is kinked at the shell, so the mollified eigenvalue
        # converges linearly in the width; two Richardson stages clean up
        # the linear and quadratic terms
        first_a = 2.0 * mid - coarse
        first_b = 2.0 * fine - mid
        eps = (4.0 * first_b - first_a) / 3.0
    else:
        diag, off = _assemble(dim, pot, grid, scales, None)
        eps = _eigenvalues(diag, off, count)

    levels = []
    for i, value in enumerate(eps):
        value = float(value)
        if value < 0.0:
            levels.append(EnergyLevel.bound_magnitude(i + 1, value, scales))
        else:
            levels.append(EnergyLevel.bound(i + 1, value, scales))
    return levels


# ---------------------------------------------------------------------------
# outward integration


def _series_start(nu: float, local_v: float, eps: float, r: float) -> tuple[float, float]:
    """Regular solution and slope at small r from its Frobenius series.

    Valid while the potential is constant below r; coefficients follow
    c_{m+1} = (v - eps) c_m / (4 (m+1)(m+1+nu)).
    """
    d = local_v - eps
    c2 = d / (4.0 * (nu + 1.0))
    c4 = d * c2 / (8.0 * (nu + 2.0))
    c6 = d * c4 / (12.0 * (nu + 3.0))
    c8 = d * c6 / (16.0 * (nu + 4.0))
    r2 = r * r
    poly = 1.0 + r2 * (c2 + r2 * (c4 + r2 * (c6 + r2 * c8)))
    slope = nu + r2 * (
        (nu + 2.0) * c2
        + r2 * ((nu + 4.0) * c4 + r2 * ((nu + 6.0) * c6 + r2 * (nu + 8.0) * c8))
    )
    return r**nu * poly, r ** (nu - 1.0) * slope


def _rk4_sweep(
    segments: list[tuple[float, float, float, object]],
    nu: float,
    eps: float,
    y0: tuple[float, float],
) -> tuple[float, float]:
    """Integrate (u, u') over (a, b, step target, potential) segments.

    Each segment carries its own potential callable so a step ending on
    a material boundary never samples the far side; mid- and endpoint
    stage evaluations of classical Runge-Kutta otherwise leak across
    discontinuities.
    """
    u, p = y0
    nu2 = nu * nu
    for a, b, target, v_of_r in segments:
        if b <= a:
            continue

        def rhs(r: float, u: float, p: float) -> tuple[float, float]:
            return p, -p / r + (nu2 / (r * r) + v_of_r(r) - eps) * u

        m = max(4, int(math.ceil((b - a) / target)))
        h = (b - a) / m
        for i in range(m):
            r = a + i * h
            k1u, k1p = rhs(r, u, p)
            k2u, k2p = rhs(r + 0.5 * h, u + 0.5 * h * k1u, p + 0.5 * h * k1p)
            k3u, k3p = rhs(r + 0.5 * h, u + 0.5 * h * k2u, p + 0.5 * h * k2p)
            k4u, k4p = rhs(r + h, u + h * k3u, p + h * k3p)
            u += h * (k1u + 2.0 * k2u + 2.0 * k3u + k4u) / 6.0
            p += h * (k1p + 2.0 * k2p + 2.0 * k3p + k4p) / 6.0
    return u, p


def _cyl(function: str, nu: float, x: float) -> float:
    return float(series_reference(function, nu, x, digits=30))


def _match_exterior(nu: float, eps: float, r_max: float, u: float, p: float) -> tuple[complex, complex]:
    """Coefficients of the in/outgoing cylinder pair fitting (u, u')."""
    k = math.sqrt(eps)
    x = k * r_max
    jv = _cyl("bessel_j", nu, x)
    yv = _cyl("bessel_y", nu, x)
    jv1 = _cyl("bessel_j", nu + 1.0, x)
    yv1 = _cyl("bessel_y", nu + 1.0, x)
    djv = (nu / r_max) * jv - k * jv1
    dyv = (nu / r_max) * yv - k * yv1
    det = 2.0 / (math.pi * r_max)            # exact Wronskian of the (J, Y) columns
    alpha = (u * dyv - p * yv) / det
    beta = (p * jv - u * djv) / det
    c_out = 0.5 * (alpha - 1j * beta)
    c_in = 0.5 * (alpha + 1j * beta)
    return c_out, c_in


def _sweep_once(
    dim: Dimension,
    pot: Potential,
    eps: float,
    grid: Grid,
    scales: PhysicalScales,
) -> tuple[complex, complex]:
    """One outward integration; returns (interior, outgoing) over unit incoming.

    The shell enters through its defining slope jump at the interface;
    the step potential through per-segment constants.  Either way the
    integrator never sees values from the wrong side of a boundary.
    """
    nu = dim.nu

    def v_zero(r: float) -> float:
        return 0.0

    if isinstance(pot, Free):
        R = 0.5 * grid.r_max
        local_v = 0.0
        v_inside = v_zero
    elif isinstance(pot, DeltaShell):
        R = pot.R
        local_v = 0.0
        v_inside = v_zero
    else:
        R = pot.R
        v0 = scales.reduced_potential(pot.V0)
        local_v = -v0

        def v_inside(r: float) -> float:
            return -v0

    if grid.r_max <= R:
        raise MatchingError("matching radius sits inside the potential support")

    kt = math.sqrt(eps - local_v)
    r_start = min(R / 4.0, math.sqrt(8e-3 * (nu + 1.0) / max(eps - local_v, 1e-30)))
    r_start = max(r_start, 1e-6 * R)
    if grid.r_min > 0.0:
        r_start = min(r_start, grid.r_min)
    u0, p0 = _series_start(nu, local_v, eps, r_start)

    segments = []
    knee = min(R / 2.0, grid.r_max / 2.0)
    rr = r_start
    while rr < knee:                          # geometric head resolves nu^2/r^2
        nxt = min(2.0 * rr, knee)
        segments.append((rr, nxt, rr / 144.0, v_inside))
        rr = nxt
    body_h = 2.0 * math.pi / kt / 576.0
    exterior_h = 2.0 * math.pi / math.sqrt(eps) / 576.0
    segments.append((knee, R, body_h, v_inside))
    u, p = _rk4_sweep(segments, nu, eps, (u0, p0))

    if isinstance(pot, DeltaShell):
        p += pot.sign * scales.reduced_coupling(pot.g) * u

    u, p = _rk4_sweep([(R, grid.r_max, exterior_h, v_zero)], nu, eps, (u, p))
    c_out, c_in = _match_exterior(nu, eps, grid.r_max, u, p)
    interior_norm = math.gamma(nu + 1.0) * (2.0 / kt) ** nu
    return interior_norm / c_in, c_out / c_in


def _printed_rate(dim: Dimension, pot: Potential, eps: float, scales: PhysicalScales) -> float:
    """The closed-form rate from the source derivation, series-evaluated."""
    nu = dim.nu
    k = math.sqrt(eps)
    if isinstance(pot, Free):
        return 4.0
    if isinstance(pot, DeltaShell):
        g = pot.sign * scales.reduced_coupling(pot.g)
        x = k * pot.R
        j0 = _cyl("bessel_j", nu, x)
        y0 = _cyl("bessel_y", nu, x)
        front = math.pi * g * pot.R
        return 16.0 / ((front * j0 * y0) ** 2 + (front * j0 * j0 - 2.0) ** 2)
    v0 = scales.reduced_potential(pot.V0)
    x = k * pot.R
    xt = math.sqrt(eps + v0) * pot.R
    j0 = _cyl("bessel_j", nu, x)
    y0 = _cyl("bessel_y", nu, x)
    j1 = _cyl("bessel_j", nu + 1.0, x)
    y1 = _cyl("bessel_y", nu + 1.0, x)
    jt0 = _cyl("bessel_j", nu, xt)
    jt1 = _cyl("bessel_j", nu + 1.0, xt)
    ratio = math.sqrt(pot.V0 / scales.physical_energy(eps) + 1.0)
    d1 = jt0 * j1 - ratio * j0 * jt1
    d2 = jt0 * y1 - ratio * y0 * jt1
    return (16.0 / (math.pi * eps * pot.R**2)) / (d1 * d1 + d2 * d2)


def fd_scattering(
    dim: Dimension, pot: Potential, eps: float, grid: Grid, scales: PhysicalScales
) -> ScatteringResult:
    """Scattering coefficients by outward integration and Hankel matching.

    The regular solution starts from its small-r series, is swept
    outward with classical Runge-Kutta, and is decomposed at
    ``grid.r_max`` into in- and outgoing cylinder waves using values and
    derivatives.  Requires sqrt(eps) * r_max within the series
    reference domain.
    """
    if not (eps > 0.0 and math.isfinite(eps)):
        raise DomainError(f"scattering energy must be positive and finite, got {eps!r}")
    if not isinstance(pot, (Free, DeltaShell, FiniteWell)):
        raise DomainError(f"no scattering setup for potential {pot!r}")
    if math.sqrt(eps) * grid.r_max > _SERIES_CAP:
        raise DomainError("matching argument exceeds the series reference domain")

    interior, outgoing = _sweep_once(dim, pot, eps, grid, scales)

    return ScatteringResult(
        eps=float(eps),
        interior_coeff=interior,
        exterior_out_coeff=outgoing,
        exterior_reflection=abs(outgoing) ** 2,
        interior_intensity=abs(interior) ** 2,
        paper_T=_printed_rate(dim, pot, eps, scales),
    )


# ---------------------------------------------------------------------------
# shooting, kept as an independent check on the matrix spectra


def _shoot_residual(dim: Dimension, pot: Potential, eps: float, r_max: float, scales: PhysicalScales) -> float:
    nu = dim.nu

    def v_zero(r: float) -> float:
        return 0.0

    if isinstance(pot, Harmonic):
        mu = scales.oscillator_scale(pot.omega)

        def v_body(r: float) -> float:
            return (mu * r) ** 2

        local_v = 0.0
        feature = r_max / 2.0
    elif isinstance(pot, InfiniteWell):
        v_body = v_zero
        local_v = 0.0
        feature = r_max
    elif isinstance(pot, FiniteWell):
        v0 = scales.reduced_potential(pot.V0)

        def v_body(r: float) -> float:
            return -v0

        local_v = -v0
        feature = pot.R
    else:
        raise DomainError(f"shooting check not defined for potential {pot!r}")

    kt = math.sqrt(max(abs(eps - local_v), 1.0))
    r_start = min(feature / 8.0, 0.02 / kt)
    u, p = _series_start(nu, local_v, eps, r_start)
    segments = []
    rr = r_start
    knee = min(feature / 2.0, r_max / 4.0)
    while rr < knee:
        nxt = min(2.0 * rr, knee)
        segments.append((rr, nxt, rr / 24.0, v_body))
        rr = nxt
    body_h = min(1.0 / (32.0 * kt), (r_max - knee) / 512.0)
    if isinstance(pot, FiniteWell) and knee < pot.R < r_max:
        segments.append((knee, pot.R, body_h, v_body))
        segments.append((pot.R, r_max, body_h, v_zero))
    else:
        segments.append((knee, r_max, body_h, v_body))
    u_end, _ = _rk4_sweep(segments, nu, eps, (u, p))
    return u_end


def shooting_bound_levels(
    dim: Dimension,
    pot: Potential,
    r_max: float,
    eps_lo: float,
    eps_hi: float,
    scales: PhysicalScales,
    count: int = 2,
    scan_points: int = 96,
) -> list[float]:
    """Reduced eigenvalues located by outward shooting to a Dirichlet wall.

    Scans [eps_lo, eps_hi] for sign changes of the end value and bisects
    each bracket.  Meant for the lowest couple of states, as a check on
    the matrix route with different discretization error.  For levels
    that decay outside a well, place the wall a few decay lengths past
    the edge: every integration error rides the growing branch, so a far
    wall amplifies it exponentially while buying almost nothing.
    """
    if not (eps_hi > eps_lo and math.isfinite(eps_lo) and math.isfinite(eps_hi)):
        raise DomainError("shooting scan needs a finite ordered energy window")
    if not (r_max > 0.0 and math.isfinite(r_max)):
        raise DomainError(f"shooting wall must be positive and finite, got {r_max!r}")

    grid_eps = np.linspace(eps_lo, eps_hi, scan_points)
    values = [_shoot_residual(dim, pot, float(e), r_max, scales) for e in grid_eps]
    roots: list[float] = []
    for i in range(len(grid_eps) - 1):
        f_lo, f_hi = values[i], values[i + 1]
        if f_lo == 0.0:
            roots.append(float(grid_eps[i]))
            continue
        if f_lo * f_hi >= 0.0:
            continue
        a, b = float(grid_eps[i]), float(grid_eps[i + 1])
        fa = f_lo
        for _ in range(80):
            m = 0.5 * (a + b)
            fm = _shoot_residual(dim, pot, m, r_max, scales)
            if fm == 0.0:
                a = b = m
                break
            if fa * fm < 0.0:
                b = m
            else:
                a, fa = m, fm
            if abs(b - a) <= 1e-12 * max(1.0, abs(a)):
                break
        roots.append(0.5 * (a + b))
        if len(roots) >= count:
            break
    return roots[:count]
