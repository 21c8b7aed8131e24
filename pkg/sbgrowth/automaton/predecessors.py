"""
Which syllable may stand immediately left of which in a normal form.

For simples the rule is the greedy (left-weighted) condition: h may precede g
iff no s_a is both a right divisor of h and a left extension of g. Every x
syllable may precede a simple, and every syllable may precede Delta.

Before x_k, a simple h is excluded when the last crossing of h could be
pushed past x_k: when h has a right divisor s_a with |a - k| != 1, or
s_k s_{k+1}, or s_k s_{k-1}. Every x may precede every x; the order of
far-apart commuting x's is fixed by the automaton's x-context.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from ..words import (
    MonoidKind,
    SimpleElement,
    gen_left_extends_simple,
    gen_right_divides,
    right_divides_word,
)
from .syllables import Syllable, alphabet


def greedy_pair(left: SimpleElement, right: SimpleElement) -> bool:
    n = left.n
    return not any(
        gen_right_divides(a, left) and gen_left_extends_simple(a, right) for a in range(1, n)
    )


def blocks_singular(h: SimpleElement, k: int) -> bool:
    """True iff the simple h cannot stand immediately before x_k."""
    n = h.n
    if any(gen_right_divides(a, h) for a in range(1, n) if abs(a - k) != 1):
        return True
    if k + 1 <= n - 1 and right_divides_word((k, k + 1), h):
        return True
    if k - 1 >= 1 and right_divides_word((k, k - 1), h):
        return True
    return False


def precedes(left: Syllable, right: Syllable) -> bool:
    if left.is_x:
        return True
    if right.is_x:
        return not blocks_singular(left.simple, right.x_index)
    return greedy_pair(left.simple, right.simple)


def pred_set(
    s: Syllable,
    n: int | None = None,
    kind: MonoidKind = MonoidKind.SINGULAR,
) -> frozenset[Syllable]:
    n = s.n if n is None else n
    return frozenset(g for g in alphabet(n, kind) if precedes(g, s))


@dataclass(frozen=True)
class EpsilonMatrix:
    """entries[i][j] = 1 iff syllable ids[j] is a predecessor of syllable ids[i]."""

    n: int
    kind: MonoidKind
    ids: tuple[int, ...]
    entries: tuple[tuple[int, ...], ...]

    def index(self, syllable_id: int) -> int:
        return self.ids.index(syllable_id)

    def entry(self, target_id: int, predecessor_id: int) -> int:
        return self.entries[self.index(target_id)][self.index(predecessor_id)]

    def row(self, target_id: int) -> frozenset[int]:
        row = self.entries[self.index(target_id)]
        return frozenset(i for i, e in zip(self.ids, row) if e)


@lru_cache(maxsize=None)
def epsilon_matrix(n: int, kind: MonoidKind = MonoidKind.SINGULAR) -> EpsilonMatrix:
    syllables = alphabet(n, kind)
    entries = tuple(
        tuple(int(precedes(left, right)) for left in syllables)
        for right in syllables
    )
    return EpsilonMatrix(
        n=n, kind=MonoidKind(kind), ids=tuple(s.id for s in syllables), entries=entries,
    )
