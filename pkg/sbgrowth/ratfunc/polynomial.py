"""
Dense univariate polynomials over Q in the variable t.

Coefficients are kept as ``Fraction`` in ascending order with no trailing
zeros, so equal polynomials compare equal. Products are computed on
integer-scaled coefficient lists, so integer polynomials never pay
Fraction overhead in the inner loop.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Iterable, Union

from ..errors import ZeroDivisorError

Number = Union[int, Fraction]


def _trim(coeffs: Iterable[Number]) -> tuple[Fraction, ...]:
    out = [Fraction(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def _common_denominator(coeffs: Iterable[Fraction]) -> int:
    d = 1
    for c in coeffs:
        d = math.lcm(d, c.denominator)
    return d


def _int_convolve(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return out


@dataclass(frozen=True)
class Polynomial:
    coeffs: tuple[Fraction, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", _trim(self.coeffs))

    # ── constructors ────────────────────────────────────────────────────

    @classmethod
    def of(cls, *coeffs: Number) -> Polynomial:
        return cls(tuple(coeffs))

    @classmethod
    def zero(cls) -> Polynomial:
        return cls(())

    @classmethod
    def one(cls) -> Polynomial:
        return cls((1,))

    @classmethod
    def monomial(cls, k: int, c: Number = 1) -> Polynomial:
        return cls((0,) * k + (c,))

    @classmethod
    def coerce(cls, value: Any) -> Polynomial:
        if isinstance(value, Polynomial):
            return value
        if isinstance(value, (int, Fraction)):
            return cls((value,))
        return NotImplemented

    # ── inspection ──────────────────────────────────────────────────────

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    @property
    def constant(self) -> Fraction:
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __call__(self, value: Any) -> Any:
        acc = 0 * value
        for c in reversed(self.coeffs):
            acc = acc * value + _lift(c, value)
        return acc

    def eval_at(self, value: Number) -> Fraction:
        return self(Fraction(value))

    def eval_real(self, value: float) -> float:
        return self(float(value))

    # ── arithmetic ──────────────────────────────────────────────────────

    def __neg__(self) -> Polynomial:
        return Polynomial(tuple(-c for c in self.coeffs))

    def __add__(self, other: Any) -> Polynomial:
        other = Polynomial.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        size = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(tuple(self[k] + other[k] for k in range(size)))

    __radd__ = __add__

    def __sub__(self, other: Any) -> Polynomial:
        other = Polynomial.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Any) -> Polynomial:
        return (-self) + other

    def __mul__(self, other: Any) -> Polynomial:
        if isinstance(other, (int, Fraction)):
            return Polynomial(tuple(c * other for c in self.coeffs))
        if not isinstance(other, Polynomial):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return Polynomial.zero()
        da, db = _common_denominator(self.coeffs), _common_denominator(other.coeffs)
        a = [int(c * da) for c in self.coeffs]
        b = [int(c * db) for c in other.coeffs]
        product = _int_convolve(a, b)
        scale = da * db
        if scale == 1:
            return Polynomial(tuple(product))
        return Polynomial(tuple(Fraction(c, scale) for c in product))

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> Polynomial:
        result = Polynomial.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __divmod__(self, other: Polynomial) -> tuple[Polynomial, Polynomial]:
        return divrem(self, other)

    def __floordiv__(self, other: Polynomial) -> Polynomial:
        return divrem(self, other)[0]

    def __mod__(self, other: Polynomial) -> Polynomial:
        return divrem(self, other)[1]

    def exact_div(self, other: Polynomial) -> Polynomial:
        q, r = divrem(self, other)
        if not r.is_zero:
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    # ── derived polynomials ─────────────────────────────────────────────

    def truncate(self, k: int) -> Polynomial:
        """Keep the terms of degree < k."""
        return Polynomial(self.coeffs[:k])

    def derivative(self) -> Polynomial:
        return Polynomial(tuple(k * c for k, c in enumerate(self.coeffs) if k > 0))

    def monic(self) -> Polynomial:
        if self.is_zero:
            return self
        lead = self.leading
        return Polynomial(tuple(c / lead for c in self.coeffs))

    def taylor_shift(self, a: Number) -> Polynomial:
        """p(t + a)."""
        result = Polynomial.zero()
        step = Polynomial.of(a, 1)
        for c in reversed(self.coeffs):
            result = result * step + c
        return result

    def integer_coefficients(self) -> tuple[int, ...]:
        """Coprime integer coefficients of a positive rational multiple of self."""
        d = _common_denominator(self.coeffs)
        ints = [int(c * d) for c in self.coeffs]
        g = math.gcd(*ints) if ints else 1
        return tuple(c // g for c in ints) if g > 1 else tuple(ints)

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            power = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            if power and abs(c) == 1:
                coef = "-" if c < 0 else ""
            else:
                coef = str(c)
            terms.append(f"{coef}{power}")
        return " + ".join(terms).replace("+ -", "- ")


def _lift(c: Fraction, like: Any) -> Any:
    if isinstance(like, (int, Fraction)):
        return c
    if isinstance(like, float):
        return float(c)
    # mpf, numpy scalars: build the rational in the value's own number type
    return type(like)(c.numerator) / c.denominator


def divrem(a: Polynomial, b: Polynomial) -> tuple[Polynomial, Polynomial]:
    """Euclidean division over Q: a = q b + r with deg r < deg b."""
    if b.is_zero:
        raise ZeroDivisorError("polynomial division by zero")
    if a.degree < b.degree:
        return Polynomial.zero(), a
    rem = list(a.coeffs)
    lead = b.leading
    quot = [Fraction(0)] * (a.degree - b.degree + 1)
    for k in range(a.degree - b.degree, -1, -1):
        coef = rem[k + b.degree] / lead
        quot[k] = coef
        if coef:
            for i, bc in enumerate(b.coeffs):
                rem[k + i] -= coef * bc
    return Polynomial(tuple(quot)), Polynomial(tuple(rem[: b.degree]))


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic gcd; gcd(0, 0) = 0."""
    while not b.is_zero:
        a, b = b, divrem(a, b)[1]
    return a.monic()


def poly_lcm(a: Polynomial, b: Polynomial) -> Polynomial:
    if a.is_zero or b.is_zero:
        return Polynomial.zero()
    return (a * b).exact_div(poly_gcd(a, b)).monic()
