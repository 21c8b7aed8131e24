from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Sequence

from ..errors import ZeroDivisorError
from .polynomial import Number, Polynomial, poly_gcd


@dataclass(frozen=True)
class RationalFunction:
    """
    num/den in lowest terms.

    Canonical form: gcd(num, den) = 1, den(0) = 1 when den(0) != 0, otherwise
    den is monic. Construction always canonicalises, so equality is structural.
    """

    num: Polynomial
    den: Polynomial = Polynomial((1,))

    def __post_init__(self) -> None:
        num, den = _canonical(self.num, self.den)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    @classmethod
    def coerce(cls, value: Any) -> RationalFunction:
        if isinstance(value, RationalFunction):
            return value
        if isinstance(value, (int, Fraction)):
            return cls(Polynomial((value,)))
        if isinstance(value, Polynomial):
            return cls(value)
        return NotImplemented

    @classmethod
    def from_lists(cls, num: Sequence[Number], den: Sequence[Number]) -> RationalFunction:
        return cls(Polynomial(tuple(num)), Polynomial(tuple(den)))

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def __neg__(self) -> RationalFunction:
        return RationalFunction(-self.num, self.den)

    def __add__(self, other: Any) -> RationalFunction:
        other = RationalFunction.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den == other.den:
            return RationalFunction(self.num + other.num, self.den)
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other: Any) -> RationalFunction:
        other = RationalFunction.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Any) -> RationalFunction:
        return (-self) + other

    def __mul__(self, other: Any) -> RationalFunction:
        other = RationalFunction.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other: Any) -> RationalFunction:
        other = RationalFunction.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero:
            raise ZeroDivisorError("division by the zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other: Any) -> RationalFunction:
        return RationalFunction.coerce(other) / self

    def __call__(self, value: Any) -> Any:
        return self.num(value) / self.den(value)

    def to_integer_lists(self) -> tuple[list[int], list[int]]:
        """num and den scaled jointly to coprime integers, den(0) > 0."""
        scale = 1
        for c in self.num.coeffs + self.den.coeffs:
            scale = math.lcm(scale, c.denominator)
        num = [int(c * scale) for c in self.num.coeffs]
        den = [int(c * scale) for c in self.den.coeffs]
        g = math.gcd(*num, *den)
        if g > 1:
            num = [c // g for c in num]
            den = [c // g for c in den]
        return num or [0], den

    def __str__(self) -> str:
        if self.den == Polynomial.one():
            return str(self.num)
        return f"({self.num}) / ({self.den})"


def _canonical(num: Polynomial, den: Polynomial) -> tuple[Polynomial, Polynomial]:
    if den.is_zero:
        raise ZeroDivisorError("rational function with zero denominator")
    if num.is_zero:
        return Polynomial.zero(), Polynomial.one()
    g = poly_gcd(num, den)
    if g.degree > 0:
        num, den = num.exact_div(g), den.exact_div(g)
    unit = den.constant if den.constant != 0 else den.leading
    if unit != 1:
        num, den = num * (1 / unit), den * (1 / unit)
    return num, den


def rf_normalize(num: Polynomial, den: Polynomial) -> RationalFunction:
    return RationalFunction(num, den)
