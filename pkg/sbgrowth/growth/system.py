from __future__ import annotations

import logging
from dataclasses import dataclass

from ..automaton import normal_form_automaton, alphabet
from ..ratfunc import LinearSystem, Polynomial, RationalFunction, solve_linear_system
from ..words import MonoidKind
from .config import DEFAULT_GROWTH_CONFIG, GrowthConfig

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GeneratingFunction:
    n: int
    kind: MonoidKind
    rf: RationalFunction
    # per syllable id: generating function of normal forms ending in that syllable
    per_syllable: dict[int, RationalFunction]

    @property
    def numerator(self) -> list[int]:
        return self.rf.to_integer_lists()[0]

    @property
    def denominator(self) -> list[int]:
        return self.rf.to_integer_lists()[1]


def build_system(n: int, kind: MonoidKind = MonoidKind.SINGULAR) -> LinearSystem:
    """
    One equation per non-Delta block B of the normal-form automaton:
    (t^{l_B} * [B' precedes B] - delta_{B B'}) f = -t^{l_B} * [B is a start block].
    """
    automaton = normal_form_automaton(n, kind)
    rows = [b for b in automaton.blocks if not b.syllable.is_delta]
    position = {b.index: i for i, b in enumerate(rows)}

    matrix = []
    rhs = []
    for i, b in enumerate(rows):
        power = Polynomial.monomial(b.length)
        row = [Polynomial.zero()] * len(rows)
        for p in automaton.predecessors[b.index]:
            # Delta never precedes a non-Delta syllable
            row[position[p]] = power
        row[i] = row[i] - 1
        matrix.append(tuple(row))
        rhs.append(-power if b.is_start else Polynomial.zero())

    return LinearSystem(
        labels=tuple(b.syllable.id for b in rows),
        matrix=tuple(matrix),
        rhs=tuple(rhs),
    )


def generating_function(
    n: int,
    kind: MonoidKind = MonoidKind.SINGULAR,
    config: GrowthConfig = DEFAULT_GROWTH_CONFIG,
) -> GeneratingFunction:
    kind = MonoidKind(kind)
    system = build_system(n, kind)
    logger.info("Growth system n=%d kind=%s: %d unknowns", n, kind.value, system.size)
    solution = solve_linear_system(
        system, direct_limit=config.direct_solve_limit, verify=config.verify_solutions,
    )

    per_syllable: dict[int, RationalFunction] = {}
    for label, f in zip(system.labels, solution):
        per_syllable[label] = per_syllable.get(label, RationalFunction(Polynomial.zero())) + f

    partial = RationalFunction(Polynomial.one())
    for f in per_syllable.values():
        partial = partial + f
    delta = next(s for s in alphabet(n, kind) if s.is_delta)
    closing = 1 - RationalFunction(Polynomial.monomial(delta.length))
    total = partial / closing
    per_syllable[delta.id] = total - partial

    return GeneratingFunction(
        n=n, kind=kind, rf=total, per_syllable=dict(sorted(per_syllable.items())),
    )
