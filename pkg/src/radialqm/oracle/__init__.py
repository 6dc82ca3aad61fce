"""Independent cross-checks: series references and finite-difference spectra.

Nothing in here shares numerics with :mod:`radialqm.specfun` or the
solvers; the point is an arithmetic path with no common code to fail in
common.  Plain data containers (grids, result records) are shared, they
carry no arithmetic.
"""

from .fd import Grid, fd_bound_spectrum, fd_scattering, shooting_bound_levels
from .fixtures import ReferenceRow, load_reference_table, write_reference_table
from .report import OracleReport, cross_validate, validation_report
from .series import SeriesDomainError, series_reference

__all__ = [
    "series_reference",
    "SeriesDomainError",
    "ReferenceRow",
    "load_reference_table",
    "write_reference_table",
    "Grid",
    "fd_bound_spectrum",
    "fd_scattering",
    "shooting_bound_levels",
    "OracleReport",
    "cross_validate",
    "validation_report",
]
