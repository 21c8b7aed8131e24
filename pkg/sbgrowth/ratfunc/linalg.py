"""
Exact solution of square linear systems A(t) f = rhs(t) over Q(t).

Small systems use Bareiss fraction-free elimination. Larger ones, whose
constant term A(0) is invertible, are expanded as power series to a number
of terms certified by the row-degree bound on det A and reconstructed one
unknown at a time. Both routes finish with an exact re-substitution check.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from ..errors import SingularMatrixError
from .polynomial import Polynomial, poly_lcm
from .rational import RationalFunction
from .series import rational_from_series

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LinearSystem:
    labels: tuple[int, ...]
    matrix: tuple[tuple[Polynomial, ...], ...]
    rhs: tuple[Polynomial, ...]

    def __post_init__(self) -> None:
        size = len(self.labels)
        if len(self.matrix) != size or len(self.rhs) != size:
            raise ValueError("labels, matrix rows and rhs must have the same length")
        if any(len(row) != size for row in self.matrix):
            raise ValueError("matrix must be square")

    @property
    def size(self) -> int:
        return len(self.labels)

    def row_degrees(self) -> list[int]:
        return [max((e.degree for e in row), default=-1) for row in self.matrix]

    def determinant_degree_bound(self) -> int:
        return sum(max(d, 0) for d in self.row_degrees())

    def numerator_degree_bound(self) -> int:
        return sum(max(d, r.degree, 0) for d, r in zip(self.row_degrees(), self.rhs))


def solve_linear_system(
    system: LinearSystem,
    direct_limit: int = 12,
    verify: bool = True,
) -> tuple[RationalFunction, ...]:
    if system.size == 0:
        return ()
    if system.size <= direct_limit:
        route, solution = "bareiss", _solve_bareiss(system)
    else:
        solution = _solve_by_series(system)
        route = "series"
        if solution is None:
            logger.warning("A(0) singular for a %d-unknown system; falling back to Bareiss", system.size)
            route, solution = "bareiss", _solve_bareiss(system)
    logger.info("Solved %d-unknown system via %s", system.size, route)
    if verify:
        check_solution(system, solution)
    return solution


def check_solution(system: LinearSystem, solution: Sequence[RationalFunction]) -> None:
    """Exact re-substitution: raise unless A f = rhs holds identically."""
    common = Polynomial.one()
    for f in solution:
        common = poly_lcm(common, f.den)
    scaled = [f.num * common.exact_div(f.den) for f in solution]
    for i, row in enumerate(system.matrix):
        lhs = Polynomial.zero()
        for a, p in zip(row, scaled):
            if not a.is_zero and not p.is_zero:
                lhs = lhs + a * p
        if lhs != system.rhs[i] * common:
            raise SingularMatrixError(f"re-substitution failed in row {i} (label {system.labels[i]})")


# ── Bareiss ──────────────────────────────────────────────────────────────


def _solve_bareiss(system: LinearSystem) -> tuple[RationalFunction, ...]:
    size = system.size
    m = [list(row) + [system.rhs[i]] for i, row in enumerate(system.matrix)]
    previous = Polynomial.one()
    for k in range(size):
        candidates = [i for i in range(k, size) if not m[i][k].is_zero]
        if not candidates:
            raise SingularMatrixError(f"no pivot in column {k}: determinant is zero")
        pivot_row = min(candidates, key=lambda i: m[i][k].degree)
        if pivot_row != k:
            m[k], m[pivot_row] = m[pivot_row], m[k]
        pivot = m[k][k]
        for i in range(k + 1, size):
            for j in range(k + 1, size + 1):
                m[i][j] = (pivot * m[i][j] - m[i][k] * m[k][j]).exact_div(previous)
            m[i][k] = Polynomial.zero()
        previous = pivot

    solution: list[RationalFunction] = [RationalFunction(Polynomial.zero())] * size
    for i in range(size - 1, -1, -1):
        acc = RationalFunction(m[i][size])
        for j in range(i + 1, size):
            if not m[i][j].is_zero:
                acc = acc - solution[j] * m[i][j]
        solution[i] = acc / m[i][i]
    return tuple(solution)


# ── power-series route ───────────────────────────────────────────────────


def _as_number(value: Fraction) -> int | Fraction:
    return value.numerator if value.denominator == 1 else value


def _invert_constant_term(matrix: list[list[Fraction]]) -> list[list[int | Fraction]] | None:
    size = len(matrix)
    aug = [list(row) + [Fraction(int(i == j)) for j in range(size)] for i, row in enumerate(matrix)]
    for col in range(size):
        pivot = next((r for r in range(col, size) if aug[r][col] != 0), None)
        if pivot is None:
            return None
        aug[col], aug[pivot] = aug[pivot], aug[col]
        lead = aug[col][col]
        aug[col] = [v / lead for v in aug[col]]
        for r in range(size):
            if r != col and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [a - factor * b for a, b in zip(aug[r], aug[col])]
    return [[_as_number(v) for v in row[size:]] for row in aug]


def _solve_by_series(system: LinearSystem) -> tuple[RationalFunction, ...] | None:
    size = system.size
    inverse = _invert_constant_term([[a.constant for a in row] for row in system.matrix])
    if inverse is None:
        return None
    diagonal = all(inverse[i][j] == 0 for i in range(size) for j in range(size) if i != j)

    den_bound = system.determinant_degree_bound()
    num_bound = system.numerator_degree_bound()
    terms = 2 * max(den_bound, num_bound + 1)
    logger.info("Series route: %d unknowns, %d terms (det degree <= %d)", size, terms, den_bound)

    # sparse slices A_d for d >= 1
    max_deg = max((a.degree for row in system.matrix for a in row), default=0)
    slices: list[list[tuple[int, int, int | Fraction]]] = [[] for _ in range(max_deg + 1)]
    for i, row in enumerate(system.matrix):
        for j, a in enumerate(row):
            for d in range(1, a.degree + 1):
                if a.coeffs[d] != 0:
                    slices[d].append((i, j, _as_number(a.coeffs[d])))

    coeffs: list[list[int | Fraction]] = []
    for k in range(terms):
        residual = [_as_number(r[k]) for r in system.rhs]
        for d in range(1, min(k, max_deg) + 1):
            previous = coeffs[k - d]
            for i, j, a in slices[d]:
                residual[i] -= a * previous[j]
        if diagonal:
            coeffs.append([inverse[i][i] * residual[i] for i in range(size)])
        else:
            coeffs.append([
                sum(inverse[i][j] * residual[j] for j in range(size) if inverse[i][j] != 0)
                for i in range(size)
            ])

    return tuple(
        rational_from_series([c[j] for c in coeffs], num_bound, den_bound)
        for j in range(size)
    )
