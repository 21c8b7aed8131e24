from __future__ import annotations

import random
from fractions import Fraction

import pytest

from sbgrowth.errors import (
    InsufficientTermsError,
    PoleAtOriginError,
    SingularMatrixError,
    ZeroDivisorError,
)
from sbgrowth.ratfunc import (
    LinearSystem,
    Polynomial,
    RationalFunction,
    berlekamp_massey,
    check_solution,
    divrem,
    poly_gcd,
    rational_from_series,
    recurrence_from,
    rf_normalize,
    series_expand,
    solve_linear_system,
)

P = Polynomial.of
T = Polynomial.monomial(1)
F3 = RationalFunction.from_lists([1], [1, -4, 2, 3, -2])


def _random_poly(rng: random.Random, max_degree: int = 3) -> Polynomial:
    return Polynomial(tuple(
        Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(rng.randint(0, max_degree + 1))
    ))


def _random_rf(rng: random.Random) -> RationalFunction:
    den = _random_poly(rng, 2)
    while den.is_zero:
        den = _random_poly(rng, 2)
    return RationalFunction(_random_poly(rng), den)


class TestPolynomial:
    def test_product_of_factors(self):
        assert P(1, -1) * P(1, -3, -1, 2) == P(1, -4, 2, 3, -2)

    def test_trailing_zeros_trimmed(self):
        assert P(1, 2, 0, 0) == P(1, 2)
        assert P(0, 0).is_zero
        assert P(0).degree == -1

    def test_divrem(self):
        q, r = divrem(P(1, -4, 2, 3, -2), P(1, -1))
        assert q == P(1, -3, -1, 2)
        assert r.is_zero
        q, r = divrem(P(1, 0, 1), P(1, 1))
        assert q * P(1, 1) + r == P(1, 0, 1)
        assert r.degree < 1

    def test_divrem_by_zero(self):
        with pytest.raises(ZeroDivisorError):
            divrem(P(1, 1), Polynomial.zero())

    def test_gcd_is_monic(self):
        a = P(-1, 1) * P(-2, 1) * 3
        b = P(-1, 1) * P(3, 1) * Fraction(1, 2)
        assert poly_gcd(a, b) == P(-1, 1)
        assert poly_gcd(Polynomial.zero(), Polynomial.zero()).is_zero

    def test_evaluate_rational(self):
        assert P(1, -4, 2, 3, -2)(Fraction(1)) == 0
        assert P(1, 1)(Fraction(1, 2)) == Fraction(3, 2)
        assert P(1, 1)(0.5) == pytest.approx(1.5)
        assert P(1, -3, -1, 2).eval_at(Fraction(1, 2)) == Fraction(-1, 2)
        assert P(1, -3, -1, 2).eval_real(1) == pytest.approx(-1.0)

    def test_gcd_of_cyclotomic_pair(self):
        assert poly_gcd(P(1, 0, 0, -1), P(1, -1)) == P(-1, 1)

    def test_taylor_shift(self):
        assert P(0, 0, 1).taylor_shift(1) == P(1, 2, 1)

    def test_integer_coefficients(self):
        assert P(Fraction(1, 2), Fraction(-3, 4)).integer_coefficients() == (2, -3)


class TestRationalFunction:
    def test_normalize_cancels_and_scales(self):
        rf = rf_normalize(P(1, -1) * 2, P(1, -1) * P(2, -4))
        assert rf.num == P(1)
        assert rf.den == P(1, -2)

    def test_positive_constant_term(self):
        rf = rf_normalize(P(1), P(-1, 1))
        assert rf.num == P(-1)
        assert rf.den == P(1, -1)

    def test_pole_at_origin_den_monic(self):
        rf = rf_normalize(P(1), P(0, 3))
        assert rf.den == P(0, 1)
        assert rf.num == P(Fraction(1, 3))

    def test_zero_denominator(self):
        with pytest.raises(ZeroDivisorError):
            rf_normalize(P(1), Polynomial.zero())

    def test_arithmetic(self):
        one_over = RationalFunction(P(1), P(1, -1))
        assert one_over * one_over == RationalFunction(P(1), P(1, -2, 1))
        assert one_over - one_over == RationalFunction(Polynomial.zero())
        assert (1 - RationalFunction(T)) * one_over == RationalFunction(P(1))
        assert one_over / one_over == RationalFunction(P(1))

    def test_integer_lists(self):
        rf = RationalFunction.from_lists([1], [2, -1])
        assert rf.to_integer_lists() == ([1], [2, -1])
        assert F3.to_integer_lists() == ([1], [1, -4, 2, 3, -2])


@pytest.mark.parametrize("seed", range(20))
def test_polynomial_ring_axioms(seed):
    rng = random.Random(seed)
    a, b, c = (_random_poly(rng) for _ in range(3))
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + Polynomial.zero() == a
    assert a * Polynomial.one() == a
    assert (a - a).is_zero
    if not b.is_zero:
        q, r = divrem(a, b)
        assert q * b + r == a
        assert r.degree < b.degree


@pytest.mark.parametrize("seed", range(20))
def test_rational_field_axioms(seed):
    rng = random.Random(seed)
    f, g, h = (_random_rf(rng) for _ in range(3))
    assert f + g == g + f
    assert f * g == g * f
    assert (f + g) + h == f + (g + h)
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert (f - f).is_zero
    if not f.is_zero:
        assert f / f == RationalFunction(Polynomial.one())


class TestSeries:
    def test_expand_three_strand(self):
        assert series_expand(F3, 6) == [1, 4, 14, 45, 142, 444, 1385]

    def test_expand_two_strand(self):
        assert series_expand(RationalFunction.from_lists([1], [1, -2, 1]), 3) == [1, 2, 3, 4]

    def test_pole_at_origin(self):
        with pytest.raises(PoleAtOriginError):
            series_expand(RationalFunction.from_lists([1], [0, 1]), 3)

    def test_recurrence(self):
        rec = recurrence_from(F3)
        assert rec.coefficients == (4, -2, -3, 2)
        assert rec.valid_from == 1
        assert rec.reduced_coefficients == (3, 1, -2)
        assert rec.constant == 1

    def test_recurrences_hold(self):
        series = series_expand(F3, 30)
        rec = recurrence_from(F3)
        for k in range(1, 31):
            assert rec.predict(series, k) == series[k]
            assert rec.predict_inhomogeneous(series, k) == series[k]

    def test_extend(self):
        rec = recurrence_from(F3)
        assert rec.extend([1], 5) == [1, 4, 14, 45, 142, 444]

    def test_no_unit_pole(self):
        rec = recurrence_from(RationalFunction.from_lists([1], [1, -2]))
        assert rec.reduced_coefficients is None
        with pytest.raises(ValueError):
            rec.predict_inhomogeneous([1, 2], 1)


class TestReconstruction:
    def test_fibonacci_connection_polynomial(self):
        connection, length = berlekamp_massey([1, 1, 2, 3, 5, 8, 13, 21])
        assert length == 2
        lead = Fraction(connection[0])
        assert [Fraction(c) / lead for c in connection] == [1, -1, -1]

    def test_recovers_three_strand_function(self):
        assert rational_from_series(series_expand(F3, 40), 3, 6) == F3

    def test_rational_coefficients(self):
        rf = RationalFunction.from_lists([Fraction(1, 3), 1], [1, Fraction(-1, 2)])
        assert rational_from_series(series_expand(rf, 20), 2, 2) == rf

    def test_insufficient_terms(self):
        with pytest.raises(InsufficientTermsError):
            rational_from_series(series_expand(F3, 5), 3, 6)


class TestLinearSystem:
    def test_one_unknown(self):
        system = LinearSystem(labels=(1,), matrix=((P(-1, 1),),), rhs=(P(-1),))
        (f,) = solve_linear_system(system)
        assert f == RationalFunction(P(1), P(1, -1))

    def test_empty_system(self):
        assert solve_linear_system(LinearSystem(labels=(), matrix=(), rhs=())) == ()

    def test_bareiss_and_series_agree(self):
        # f1 = t (1 + f1 + f2), f2 = t^2 (1 + f1)
        system = LinearSystem(
            labels=(1, 2),
            matrix=((P(-1, 1), P(0, 1)), (P(0, 0, 1), P(-1))),
            rhs=(P(0, -1), P(0, 0, -1)),
        )
        direct = solve_linear_system(system, direct_limit=12)
        expanded = solve_linear_system(system, direct_limit=0)
        assert direct == expanded
        check_solution(system, direct)

    def test_singular(self):
        system = LinearSystem(
            labels=(1, 2), matrix=((T, T), (T, T)), rhs=(P(1), P(1)),
        )
        with pytest.raises(SingularMatrixError):
            solve_linear_system(system)

    def test_check_solution_rejects_wrong_answer(self):
        system = LinearSystem(labels=(1,), matrix=((P(-1, 1),),), rhs=(P(-1),))
        with pytest.raises(SingularMatrixError):
            check_solution(system, (RationalFunction(P(1), P(1, -2)),))

    def test_shape_validation(self):
        with pytest.raises(ValueError):
            LinearSystem(labels=(1, 2), matrix=((P(1),),), rhs=(P(1),))
