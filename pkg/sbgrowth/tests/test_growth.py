from __future__ import annotations

from fractions import Fraction

import mpmath as mp
import pytest

from sbgrowth.automaton import alphabet, count_via_dp, flip_syllable
from sbgrowth.errors import NotCubicError, RepeatedPoleError
from sbgrowth.growth import (
    GrowthConfig,
    build_system,
    count_roots,
    cubic_analysis,
    generating_function,
    growth_report,
    isolate_real_roots,
    real_roots,
    sturm_sequence,
)
from sbgrowth.ratfunc import Polynomial, RationalFunction, series_expand

CUBIC = Polynomial.of(1, -3, -1, 2)
T = Polynomial.monomial(1)
GOLDEN = (1 + 5 ** 0.5) / 2
# poles of the 3-strand singular series, ascending, with their residues
THREE_STRAND_POLES = [-1.161702138, 0.3210368161, 1.0, 1.340665322]
THREE_STRAND_RESIDUES = [-0.06233879045, 0.4870988600, -1.0, 0.5752399310]


@pytest.fixture(scope="module")
def three_strand():
    return generating_function(3)


@pytest.fixture(scope="module")
def three_strand_report(three_strand):
    return growth_report(three_strand)


class TestGeneratingFunction:
    def test_three_strand(self, three_strand):
        assert three_strand.numerator == [1]
        assert three_strand.denominator == [1, -4, 2, 3, -2]

    def test_two_strand(self):
        gf = generating_function(2)
        assert (gf.numerator, gf.denominator) == ([1], [1, -2, 1])

    def test_classical_three_strand(self):
        gf = generating_function(3, "classical")
        assert (gf.numerator, gf.denominator) == ([1], [1, -2, 0, 1])

    def test_system_shape(self):
        system = build_system(3)
        assert system.size == 6
        assert system.labels == (2, 3, 4, 5, 7, 8)

    def test_parts_sum_to_total(self, three_strand):
        total = RationalFunction(Polynomial.one())
        for f in three_strand.per_syllable.values():
            total = total + f
        assert total == three_strand.rf

    def test_delta_part(self, three_strand):
        # normal forms ending in Delta start 0, 0, 0, 1, ...
        assert series_expand(three_strand.per_syllable[6], 4)[:4] == [0, 0, 0, 1]

    def test_single_crossing_closed_form(self, three_strand):
        assert three_strand.per_syllable[2] == RationalFunction(T, CUBIC)

    def test_two_crossings_is_shifted_single(self, three_strand):
        assert three_strand.per_syllable[4] == T * three_strand.per_syllable[2]

    def test_singular_generator_closed_form(self, three_strand):
        one_minus_2t = Polynomial.of(1, -2)
        expected = RationalFunction(T * T, one_minus_2t * CUBIC) + RationalFunction(T, one_minus_2t)
        assert three_strand.per_syllable[7] == expected

    def test_flip_symmetry_three_strands(self, three_strand):
        for s in alphabet(3):
            assert three_strand.per_syllable[s.id] == three_strand.per_syllable[flip_syllable(s).id]

    def test_flip_symmetry_four_strand_simples(self):
        gf = generating_function(4)
        for s in alphabet(4):
            if not s.is_x:
                assert gf.per_syllable[s.id] == gf.per_syllable[flip_syllable(s).id]

    def test_series_matches_dp_three_strands(self, three_strand):
        assert series_expand(three_strand.rf, 30) == list(count_via_dp(3, 30).counts)

    def test_series_matches_dp_four_strands(self):
        assert series_expand(generating_function(4).rf, 12) == list(count_via_dp(4, 12).counts)

    def test_classical_four_strands_matches_dp(self):
        gf = generating_function(4, "classical")
        assert series_expand(gf.rf, 15) == list(count_via_dp(4, 15, "classical").counts)

    def test_series_route_agrees(self, three_strand):
        assert generating_function(3, config=GrowthConfig(direct_solve_limit=0)).rf == three_strand.rf


class TestRoots:
    def test_count_roots(self):
        den = Polynomial.of(1, -4, 2, 3, -2)
        assert count_roots(den, Fraction(-2), Fraction(2)) == 4
        assert count_roots(den, Fraction(0), Fraction(1, 2)) == 1
        assert count_roots(den, Fraction(1, 2), Fraction(1)) == 1

    def test_isolated_cubic_roots(self):
        roots = isolate_real_roots(CUBIC, 1e-12)
        assert len(roots) == 3
        assert roots[1] == pytest.approx(0.3210368161, abs=1e-8)
        for r in roots:
            assert abs(float(CUBIC(r))) < 1e-9

    def test_vieta_on_cubic_roots(self):
        with mp.workdps(50):
            r0, r1, r2 = (r.value for r in real_roots(CUBIC))
            eps = mp.mpf(10) ** -30
            # 2t^3 - t^2 - 3t + 1
            assert abs(r0 + r1 + r2 - mp.mpf(1) / 2) < eps
            assert abs(r0 * r1 + r0 * r2 + r1 * r2 + mp.mpf(3) / 2) < eps
            assert abs(r0 * r1 * r2 + mp.mpf(1) / 2) < eps

    @pytest.mark.parametrize("tol", [0.0, -1e-6])
    def test_non_positive_tolerance_rejected(self, tol):
        with pytest.raises(ValueError):
            real_roots(CUBIC, GrowthConfig(tol=tol))
        with pytest.raises(ValueError):
            isolate_real_roots(CUBIC, tol)

    def test_multiplicities(self):
        roots = real_roots(Polynomial.of(-1, 1) ** 2 * Polynomial.of(2, 1))
        assert [float(r) for r in roots] == pytest.approx([-2.0, 1.0], abs=1e-12)
        assert [r.multiplicity for r in roots] == [1, 2]

    def test_sturm_sequence_of_repeated_root(self):
        seq = sturm_sequence(Polynomial.of(-1, 1) ** 2 * Polynomial.of(2, 1))
        assert seq[0].degree == 2
        assert count_roots(seq[0], Fraction(-3), Fraction(3), seq) == 2

    def test_three_strand_poles(self, three_strand_report):
        values = [float(r) for r in three_strand_report.roots]
        assert values == pytest.approx(THREE_STRAND_POLES, abs=1e-8)
        assert all(r.multiplicity == 1 for r in three_strand_report.roots)

    def test_growth_rate(self, three_strand_report):
        assert three_strand_report.growth_rate == pytest.approx(1 / 0.3210368161, rel=1e-8)
        assert float(three_strand_report.dominant_root) == pytest.approx(0.3210368161, abs=1e-9)

    def test_classical_growth_rate_is_golden(self):
        report = growth_report(generating_function(3, "classical"))
        assert report.growth_rate == pytest.approx(GOLDEN, rel=1e-10)


class TestResidues:
    def test_residue_at_one(self, three_strand_report):
        pairs = zip(three_strand_report.roots, three_strand_report.residues)
        _, residue = min(pairs, key=lambda pair: abs(float(pair[0]) - 1))
        assert float(residue) == pytest.approx(-1.0, abs=1e-10)

    def test_residue_values(self, three_strand_report):
        residues = [float(a) for a in three_strand_report.residues]
        assert residues == pytest.approx(THREE_STRAND_RESIDUES, abs=1e-8)

    def test_reconstruction(self, three_strand_report):
        ks = list(range(5, 21))
        exact = series_expand(three_strand_report.rf, 20)[5:]
        approx = three_strand_report.reconstruct(ks)
        for e, a in zip(exact, approx):
            assert abs(a - e) / e < 1e-6

    def test_ratios_approach_growth_rate(self, three_strand_report):
        ratios = three_strand_report.ratios(40)
        assert ratios[-1] == pytest.approx(three_strand_report.growth_rate, rel=1e-6)

    def test_repeated_pole_has_no_residues(self):
        report = growth_report(generating_function(2))
        assert report.residues is None
        assert report.growth_rate == pytest.approx(1.0)
        with pytest.raises(RepeatedPoleError):
            report.reconstruct([1, 2])


class TestCubic:
    def test_depressed_coefficients(self):
        cubic = cubic_analysis(CUBIC)
        assert cubic.p == Fraction(-19, 12)
        assert cubic.q == Fraction(13, 54)
        assert cubic.shift == Fraction(1, 6)
        assert CUBIC.monic().taylor_shift(cubic.shift)[2] == 0
        assert cubic.discriminant_expr < 0
        assert cubic.root_count == 3

    def test_trigonometric_roots(self):
        cubic = cubic_analysis(CUBIC)
        assert cubic.trig_agrees
        with mp.workdps(30):
            sqrt19 = mp.sqrt(19)
            closed = sqrt19 * mp.cos(mp.acos(26 * sqrt19 / 361) / 3 + mp.pi / 3) / 3 + mp.mpf(1) / 6
            assert abs(cubic.trig_roots[1] - closed) < mp.mpf(10) ** -20
        assert float(cubic.trig_roots[1]) == pytest.approx(0.3210368161, abs=1e-8)

    def test_report_carries_cubic(self, three_strand_report):
        assert three_strand_report.cubic is not None
        assert three_strand_report.cubic.p == Fraction(-19, 12)
        assert three_strand_report.cubic.factor.integer_coefficients() == (1, -3, -1, 2)

    def test_one_real_root(self):
        cubic = cubic_analysis(Polynomial.of(1, 1, 0, 1))
        assert cubic.root_count == 1
        assert cubic.trig_roots is None

    def test_not_cubic(self):
        with pytest.raises(NotCubicError):
            cubic_analysis(Polynomial.of(1, -4, 2, 3, -2))

    def test_recurrence_in_report(self, three_strand_report):
        rec = three_strand_report.recurrence
        assert rec.coefficients == (4, -2, -3, 2)
        assert rec.reduced_coefficients == (3, 1, -2)
        assert rec.constant == 1
