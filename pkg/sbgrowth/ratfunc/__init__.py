"""
Exact rational-function toolkit over Q.

Responsibilities:
- Polynomials with Fraction coefficients: arithmetic, division, gcd.
- Rational functions in canonical lowest terms.
- Exact solution of linear systems over Q(t).
- Series expansion, linear recurrences, and reconstruction from series.
"""
from __future__ import annotations

from .linalg import LinearSystem, check_solution, solve_linear_system
from .polynomial import Polynomial, divrem, poly_gcd, poly_lcm
from .rational import RationalFunction, rf_normalize
from .series import Recurrence, berlekamp_massey, rational_from_series, recurrence_from, series_expand

__all__ = [
    "LinearSystem",
    "Polynomial",
    "RationalFunction",
    "Recurrence",
    "berlekamp_massey",
    "check_solution",
    "divrem",
    "poly_gcd",
    "poly_lcm",
    "rational_from_series",
    "recurrence_from",
    "rf_normalize",
    "series_expand",
    "solve_linear_system",
]
