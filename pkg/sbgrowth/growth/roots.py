"""
Real roots of rational polynomials.

Isolation is exact and delegated to sympy: ``Poly.intervals`` returns disjoint
rational intervals, each holding one real root with its multiplicity, refined
below the tolerance. mpmath then polishes the midpoint with Newton steps on
the squarefree part, keeping a step only while it stays inside the interval.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction

import mpmath as mp
import sympy as sp

from ..ratfunc import Polynomial
from .config import DEFAULT_GROWTH_CONFIG, GrowthConfig

logger = logging.getLogger(__name__)

_T = sp.Symbol("t")


@dataclass(frozen=True)
class RealRoot:
    value: mp.mpf
    multiplicity: int
    lower: Fraction
    upper: Fraction

    def __float__(self) -> float:
        return float(self.value)


def _rational(value: Fraction) -> sp.Rational:
    return sp.Rational(value.numerator, value.denominator)


def _fraction(value: sp.Rational) -> Fraction:
    return Fraction(int(value.p), int(value.q))


def to_sympy(p: Polynomial) -> sp.Poly:
    return sp.Poly([_rational(c) for c in reversed(p.coeffs)] or [0], _T, domain=sp.QQ)


def from_sympy(poly: sp.Poly) -> Polynomial:
    return Polynomial(tuple(_fraction(c) for c in reversed(poly.all_coeffs())))


def sturm_sequence(p: Polynomial) -> list[Polynomial]:
    """Sturm sequence of the squarefree part of p."""
    return [from_sympy(s) for s in to_sympy(p).sturm() if not s.is_zero]


def sign_changes(values: list[Fraction]) -> int:
    nonzero = [v for v in values if v != 0]
    return sum(1 for u, v in zip(nonzero, nonzero[1:]) if (u > 0) != (v > 0))


def count_roots(p: Polynomial, a: Fraction, b: Fraction, sequence: list[Polynomial] | None = None) -> int:
    """Number of distinct real roots of p in (a, b]."""
    seq = sequence if sequence is not None else sturm_sequence(p)
    return sign_changes([s(a) for s in seq]) - sign_changes([s(b) for s in seq])


def _polish(p: Polynomial, a: Fraction, b: Fraction) -> mp.mpf:
    lo, hi = mp.mpf(a.numerator) / a.denominator, mp.mpf(b.numerator) / b.denominator
    guess = (lo + hi) / 2
    if a == b:
        return guess
    dp = p.derivative()
    for _ in range(8):
        slope = dp(guess)
        if slope == 0:
            break
        nxt = guess - p(guess) / slope
        if not lo <= nxt <= hi:
            break
        if abs(nxt - guess) <= mp.eps * abs(nxt):
            guess = nxt
            break
        guess = nxt
    return guess


def real_roots(p: Polynomial, config: GrowthConfig = DEFAULT_GROWTH_CONFIG) -> list[RealRoot]:
    """All real roots of p with multiplicity, ascending."""
    if not config.tol > 0:
        raise ValueError(f"root tolerance must be positive, got {config.tol}")
    if p.degree < 1:
        return []
    poly = to_sympy(p)
    squarefree = from_sympy(poly.sqf_part())
    intervals = poly.intervals(eps=_rational(Fraction(config.tol)))
    roots: list[RealRoot] = []
    with mp.workdps(config.precision_dps):
        for (lo, hi), multiplicity in intervals:
            a, b = _fraction(lo), _fraction(hi)
            roots.append(RealRoot(_polish(squarefree, a, b), int(multiplicity), a, b))
    roots.sort(key=lambda r: r.lower)
    logger.debug("Isolated %d real roots of degree-%d polynomial", len(roots), p.degree)
    return roots


def isolate_real_roots(p: Polynomial, tol: float = 1e-12) -> list[float]:
    """Distinct real roots of p as floats, ascending, each within tol."""
    return [float(r) for r in real_roots(p, GrowthConfig(tol=tol))]
