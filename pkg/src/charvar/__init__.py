"""Exact E-polynomials of free-group character varieties.

Computes the Serre polynomial (E-polynomial) of the character variety of
a rank-r free group into GL(n), SL(n) or PGL(n), together with the
polynomials of all polystable strata and the compactly supported Euler
characteristics, entirely in exact rational arithmetic.  A finite-field
point count over small fields serves as an independent cross-check.
"""

from __future__ import annotations

from .epolys import (
    GroupKind,
    StratumQuery,
    b_poly,
    e_gl_stratum,
    e_gl_total,
    e_group,
    e_polynomial,
    euler_char,
)
from .errors import CharvarError, NotDivisibleError
from .partitions import (
    Partition,
    enumerate_partitions,
    format_partition,
    parse_partition,
)
from .ratpoly import RatPoly
from .series import TruncSeries

__all__ = [
    "CharvarError",
    "GroupKind",
    "NotDivisibleError",
    "Partition",
    "RatPoly",
    "StratumQuery",
    "TruncSeries",
    "b_poly",
    "e_gl_stratum",
    "e_gl_total",
    "e_group",
    "e_polynomial",
    "euler_char",
    "enumerate_partitions",
    "format_partition",
    "parse_partition",
]

__version__ = "0.1.0"
