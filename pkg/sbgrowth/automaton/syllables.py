from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from ..errors import InvalidStrandCountError
from ..words import MonoidKind, SimpleElement, Word, flip_simple, simple_to_word, x
from .config import DEFAULT_AUTOMATON_CONFIG, AutomatonConfig


@dataclass(frozen=True)
class Syllable:
    """
    A letter of the normal-form alphabet: a nontrivial simple element or a
    singular generator x_k. Ids follow the simple ordering (identity is id 1
    and is not a syllable), then x_1..x_{n-1} as ids n!+1..n!+n-1.
    """

    id: int
    n: int
    length: int
    simple: SimpleElement | None = None
    x_index: int | None = None

    @property
    def is_x(self) -> bool:
        return self.x_index is not None

    @property
    def is_delta(self) -> bool:
        return self.simple is not None and self.simple.is_delta

    @property
    def word(self) -> Word:
        if self.simple is not None:
            return simple_to_word(self.simple)
        return Word.of(self.n, x(self.x_index))

    @property
    def label(self) -> str:
        return f"g{self.id}"

    def __str__(self) -> str:
        return f"{self.label}={self.word}"


def _check_strands(n: int, config: AutomatonConfig) -> None:
    if not 2 <= n <= config.max_strands:
        raise InvalidStrandCountError(n, config.max_strands)


@lru_cache(maxsize=None)
def simples_list(n: int, config: AutomatonConfig = DEFAULT_AUTOMATON_CONFIG) -> tuple[SimpleElement, ...]:
    """All n! simple elements ordered by (length, shortlex word)."""
    _check_strands(n, config)
    simples = [SimpleElement(p) for p in itertools.permutations(range(1, n + 1))]
    return tuple(sorted(simples, key=lambda s: (s.inv_count, simple_to_word(s).codes())))


@lru_cache(maxsize=None)
def alphabet(
    n: int,
    kind: MonoidKind = MonoidKind.SINGULAR,
    config: AutomatonConfig = DEFAULT_AUTOMATON_CONFIG,
) -> tuple[Syllable, ...]:
    simples = simples_list(n, config)
    out = [
        Syllable(id=i, n=n, length=s.inv_count, simple=s)
        for i, s in enumerate(simples, start=1)
        if not s.is_identity
    ]
    if MonoidKind(kind) is MonoidKind.SINGULAR:
        base = len(simples)
        out.extend(Syllable(id=base + k, n=n, length=1, x_index=k) for k in range(1, n))
    return tuple(out)


def syllable_by_id(n: int, kind: MonoidKind = MonoidKind.SINGULAR) -> dict[int, Syllable]:
    return {s.id: s for s in alphabet(n, kind)}


def flip_syllable(s: Syllable, kind: MonoidKind = MonoidKind.SINGULAR) -> Syllable:
    """Image under s_i <-> s_{n-i}, x_i <-> x_{n-i}."""
    for candidate in alphabet(s.n, kind):
        if s.is_x and candidate.x_index == s.n - s.x_index:
            return candidate
        if not s.is_x and candidate.simple == flip_simple(s.simple):
            return candidate
    raise LookupError(f"no flip image for {s}")
