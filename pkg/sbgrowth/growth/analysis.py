from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction

import mpmath as mp
import numpy as np

from ..errors import NotCubicError, RepeatedPoleError
from ..ratfunc import Polynomial, RationalFunction, Recurrence, recurrence_from, series_expand
from ..words import MonoidKind
from .config import DEFAULT_GROWTH_CONFIG, GrowthConfig
from .roots import RealRoot, real_roots
from .system import GeneratingFunction

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CubicAnalysis:
    """
    Depressed form of a cubic c3 t^3 + c2 t^2 + c1 t + c0.

    With a = c2/c3, b = c1/c3, c = c0/c3 and t = y - a/3 the cubic becomes
    y^3 + p y + q with p = b - a^2/3 and q = 2a^3/27 - ab/3 + c. The sign of
    q^2/4 + p^3/27 decides the number of distinct real roots.
    """

    factor: Polynomial
    a: Fraction
    b: Fraction
    c: Fraction
    p: Fraction
    q: Fraction
    discriminant_expr: Fraction
    root_count: int
    isolated_roots: tuple[float, ...]
    trig_roots: tuple[mp.mpf, ...] | None = None
    trig_agrees: bool | None = None

    @property
    def shift(self) -> Fraction:
        return -self.a / 3


@dataclass(frozen=True)
class GrowthReport:
    n: int
    kind: MonoidKind
    rf: RationalFunction
    roots: tuple[RealRoot, ...]
    growth_rate: float
    residues: tuple[mp.mpf, ...] | None
    recurrence: Recurrence
    cubic: CubicAnalysis | None = None

    @property
    def dominant_root(self) -> RealRoot | None:
        positive = [r for r in self.roots if r.value > 0]
        return positive[0] if positive else None

    def reconstruct(self, ks) -> np.ndarray:
        """sum_j a_j r_j^{-(k+1)} for each k; exact only without a polynomial part."""
        if self.residues is None:
            raise RepeatedPoleError("residues unavailable: denominator has repeated or complex roots")
        k = np.atleast_1d(np.asarray(ks, dtype=float))
        a = np.array([float(v) for v in self.residues])
        r = np.array([float(root) for root in self.roots])
        return (a[None, :] * r[None, :] ** -(k[:, None] + 1)).sum(axis=1)

    def ratios(self, kmax: int) -> np.ndarray:
        """b_{k+1} / b_k for k = 0..kmax-1."""
        b = np.array([float(v) for v in series_expand(self.rf, kmax)])
        return b[1:] / b[:-1]


def cubic_analysis(p: Polynomial, config: GrowthConfig = DEFAULT_GROWTH_CONFIG) -> CubicAnalysis:
    if p.degree != 3:
        raise NotCubicError(f"expected a cubic, got degree {p.degree}")
    c0, c1, c2, c3 = p.coeffs
    a, b, c = c2 / c3, c1 / c3, c0 / c3
    depressed = p.monic().taylor_shift(-a / 3)
    dp, dq = depressed[1], depressed[0]
    disc = dq * dq / 4 + dp**3 / 27
    if disc < 0:
        count = 3
    elif disc > 0:
        count = 1
    else:
        count = 1 if dp == 0 else 2

    isolated = tuple(float(r) for r in real_roots(p, config))
    trig = agrees = None
    if disc < 0:
        with mp.workdps(config.precision_dps):
            P, Q = mp.mpf(dp.numerator) / dp.denominator, mp.mpf(dq.numerator) / dq.denominator
            amplitude = 2 * mp.sqrt(-P / 3)
            angle = mp.acos((3 * Q / (2 * P)) * mp.sqrt(-3 / P)) / 3
            shift = mp.mpf(a.numerator) / a.denominator / 3
            trig = tuple(sorted(
                amplitude * mp.cos(angle - 2 * mp.pi * k / 3) - shift for k in range(3)
            ))
        tolerance = max(config.tol, 1e-9)
        agrees = len(isolated) == 3 and all(
            abs(float(t) - r) <= tolerance for t, r in zip(trig, isolated)
        )
        if not agrees:
            logger.warning("Trigonometric cubic roots %s disagree with isolated roots %s", trig, isolated)

    return CubicAnalysis(
        factor=p, a=a, b=b, c=c, p=dp, q=dq, discriminant_expr=disc, root_count=count,
        isolated_roots=isolated, trig_roots=trig, trig_agrees=agrees,
    )


def _residues(rf: RationalFunction, roots: list[RealRoot], config: GrowthConfig) -> tuple[mp.mpf, ...]:
    if any(r.multiplicity > 1 for r in roots):
        raise RepeatedPoleError(f"denominator {rf.den} has a repeated root")
    if len(roots) != rf.den.degree:
        raise RepeatedPoleError(f"denominator {rf.den} has non-real roots")
    dden = rf.den.derivative()
    with mp.workdps(config.precision_dps):
        # F(t) ~ a / (r - t) near a simple pole r
        return tuple(rf.num(r.value) / -dden(r.value) for r in roots)


def _cubic_factor(den: Polynomial) -> Polynomial | None:
    if den.degree == 4 and den(Fraction(1)) == 0:
        return den.exact_div(Polynomial.of(1, -1))
    if den.degree == 3:
        return den
    return None


def growth_report(gf: GeneratingFunction, config: GrowthConfig = DEFAULT_GROWTH_CONFIG) -> GrowthReport:
    rf = gf.rf
    roots = real_roots(rf.den, config)
    positive = [r for r in roots if r.value > 0]
    growth_rate = float(1 / positive[0].value) if positive else 0.0

    try:
        residues = _residues(rf, roots, config)
    except RepeatedPoleError:
        logger.warning("Skipping residues for n=%d %s", gf.n, gf.kind.value, exc_info=True)
        residues = None

    cubic = None
    factor = _cubic_factor(rf.den)
    if factor is not None:
        cubic = cubic_analysis(factor, config)

    return GrowthReport(
        n=gf.n,
        kind=gf.kind,
        rf=rf,
        roots=tuple(roots),
        growth_rate=growth_rate,
        residues=residues,
        recurrence=recurrence_from(rf),
        cubic=cubic,
    )
