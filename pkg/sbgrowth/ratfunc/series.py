from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from ..errors import InsufficientTermsError, PoleAtOriginError
from .polynomial import Number, Polynomial
from .rational import RationalFunction


def series_expand(rf: RationalFunction, kmax: int) -> list[Fraction]:
    """Taylor coefficients b_0..b_kmax of rf at t = 0."""
    den = rf.den
    d0 = den.constant
    if d0 == 0:
        raise PoleAtOriginError(f"{rf} has a pole at t = 0")
    out: list[Fraction] = []
    for k in range(kmax + 1):
        acc = rf.num[k]
        for j in range(1, min(k, den.degree) + 1):
            acc -= den.coeffs[j] * out[k - j]
        out.append(acc / d0)
    return out


@dataclass(frozen=True)
class Recurrence:
    """
    b_k = sum_j coefficients[j-1] * b_{k-j} for k >= valid_from.

    When the denominator vanishes at t = 1, the factor (1 - t) is also divided
    out, giving the inhomogeneous form
    b_k = sum_j reduced_coefficients[j-1] * b_{k-j} + constant for k >= reduced_valid_from.
    Terms with negative index are zero.
    """

    coefficients: tuple[Fraction, ...]
    valid_from: int
    reduced_coefficients: tuple[Fraction, ...] | None = None
    constant: Fraction | None = None
    reduced_valid_from: int | None = None

    def predict(self, series: Sequence[Number], k: int) -> Fraction:
        return _apply(self.coefficients, series, k)

    def predict_inhomogeneous(self, series: Sequence[Number], k: int) -> Fraction:
        if self.reduced_coefficients is None or self.constant is None:
            raise ValueError("no inhomogeneous form: denominator does not vanish at t = 1")
        return _apply(self.reduced_coefficients, series, k) + self.constant

    def extend(self, initial: Sequence[Number], kmax: int) -> list[Fraction]:
        """Continue ``initial`` (at least ``valid_from`` terms) up to index kmax."""
        out = [Fraction(b) for b in initial]
        while len(out) <= kmax:
            out.append(self.predict(out, len(out)))
        return out[: kmax + 1]


def _apply(coefficients: Sequence[Fraction], series: Sequence[Number], k: int) -> Fraction:
    acc = Fraction(0)
    for j, c in enumerate(coefficients, start=1):
        if k - j >= 0:
            acc += c * series[k - j]
    return acc


def recurrence_from(rf: RationalFunction) -> Recurrence:
    den, num = rf.den, rf.num
    d0 = den.constant
    if d0 == 0:
        raise PoleAtOriginError(f"{rf} has a pole at t = 0")
    coefficients = tuple(-den.coeffs[j] / d0 for j in range(1, den.degree + 1))
    valid_from = num.degree + 1

    reduced = constant = reduced_from = None
    if den.degree >= 1 and den(Fraction(1)) == 0:
        rest = den.exact_div(Polynomial.of(1, -1))
        r0 = rest.constant
        reduced = tuple(-rest.coeffs[j] / r0 for j in range(1, rest.degree + 1))
        # partial sums of num stabilise at num(1) from index deg(num) on
        constant = num(Fraction(1)) / r0
        reduced_from = max(num.degree, 0)
    return Recurrence(coefficients, valid_from, reduced, constant, reduced_from)


def _scale_to_integers(values: Sequence[Number]) -> tuple[list[int], int]:
    scale = 1
    for v in values:
        scale = math.lcm(scale, Fraction(v).denominator)
    return [int(Fraction(v) * scale) for v in values], scale


def _primitive(coeffs: list[int]) -> list[int]:
    g = math.gcd(*coeffs)
    if g > 1:
        return [c // g for c in coeffs]
    return coeffs


def berlekamp_massey(seq: Sequence[int]) -> tuple[list[int], int]:
    """
    Fraction-free Berlekamp-Massey over the integers.

    Returns (C, L): C[0] != 0, deg C <= L, L minimal, and
    sum_{i} C[i] seq[k - i] = 0 for every L <= k < len(seq).
    C is kept primitive after every update.
    """
    C, B = [1], [1]
    L, m, b = 0, 1, 1
    for k in range(len(seq)):
        d = sum(C[i] * seq[k - i] for i in range(min(len(C), k + 1)))
        if d == 0:
            m += 1
            continue
        previous = C
        size = max(len(C), len(B) + m)
        C = [b * c for c in C] + [0] * (size - len(C))
        for i, bi in enumerate(B):
            C[i + m] -= d * bi
        C = _primitive(C)
        if 2 * L <= k:
            L = k + 1 - L
            B, b, m = previous, d, 1
        else:
            m += 1
    while len(C) > 1 and C[-1] == 0:
        C.pop()
    return C, L


def rational_from_series(
    coeffs: Sequence[Number],
    max_num_degree: int,
    max_den_degree: int,
) -> RationalFunction:
    """
    The rational function whose expansion starts with ``coeffs``, given degree
    bounds on its numerator and denominator.

    Exact when ``len(coeffs) >= 2 * max(max_den_degree, max_num_degree + 1)``.
    """
    complexity = max(max_den_degree, max_num_degree + 1)
    if len(coeffs) < 2 * complexity:
        raise InsufficientTermsError(
            f"{len(coeffs)} terms cannot certify a rational function of complexity {complexity}"
        )
    seq, scale = _scale_to_integers(coeffs)
    connection, L = berlekamp_massey(seq)
    if L > complexity:
        raise InsufficientTermsError(f"sequence complexity {L} exceeds the bound {complexity}")
    den = Polynomial(tuple(connection))
    num = (den * Polynomial(tuple(seq[:L]))).truncate(L)
    return RationalFunction(num * Fraction(1, scale), den)
