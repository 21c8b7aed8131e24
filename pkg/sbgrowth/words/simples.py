"""
Simple elements (permutation braids) of the positive braid monoid.

A simple element is stored as its strand arrangement: ``perm[p - 1]`` is the
start position of the strand that ends at position ``p``. Words are applied
left to right, each s_k swapping the strands currently at positions k and
k + 1, so the word s_a s_b is the permutation of s_b composed after s_a.
Every pair of strands crosses at most once in a simple element, and its
length is the number of crossings, i.e. the inversion count of ``perm``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from ..errors import InvalidWordError
from .generators import GeneratorKind, Word, sigma


def inversions(perm: Sequence[int]) -> int:
    n = len(perm)
    return sum(1 for p in range(n) for q in range(p + 1, n) if perm[p] > perm[q])


@dataclass(frozen=True)
class SimpleElement:
    perm: tuple[int, ...]
    inv_count: int = field(init=False, compare=False)

    def __post_init__(self) -> None:
        if sorted(self.perm) != list(range(1, len(self.perm) + 1)):
            raise InvalidWordError(f"{self.perm} is not a permutation of 1..{len(self.perm)}")
        object.__setattr__(self, "inv_count", inversions(self.perm))

    @property
    def n(self) -> int:
        return len(self.perm)

    @property
    def length(self) -> int:
        return self.inv_count

    def position_of(self, strand: int) -> int:
        """End position of the strand starting at position ``strand``."""
        return self.perm.index(strand) + 1

    @classmethod
    def identity(cls, n: int) -> SimpleElement:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def delta(cls, n: int) -> SimpleElement:
        return cls(tuple(range(n, 0, -1)))

    @classmethod
    def from_word(cls, word: Word) -> SimpleElement:
        """The simple element spelled by a reduced positive word in the s_i."""
        arrangement = list(range(1, word.n + 1))
        for g in word.letters:
            if g.kind is not GeneratorKind.SIGMA:
                raise InvalidWordError(f"{word} contains a singular generator")
            k = g.index
            if arrangement[k - 1] > arrangement[k]:
                raise InvalidWordError(f"{word} is not reduced: strands cross twice")
            arrangement[k - 1], arrangement[k] = arrangement[k], arrangement[k - 1]
        return cls(tuple(arrangement))

    @property
    def is_identity(self) -> bool:
        return self.inv_count == 0

    @property
    def is_delta(self) -> bool:
        return self.inv_count == self.n * (self.n - 1) // 2


def simple_to_word(s: SimpleElement) -> Word:
    """
    Lexicographically smallest reduced word of ``s``.

    Greedy: at each step take the smallest k such that the strands now at
    positions k and k + 1 have not crossed yet and must cross in ``s``.
    """
    n = s.n
    target_pos = {strand: p for p, strand in enumerate(s.perm)}
    current = list(range(1, n + 1))
    letters = []
    for _ in range(s.inv_count):
        for k in range(1, n):
            left, right = current[k - 1], current[k]
            if left < right and target_pos[left] > target_pos[right]:
                current[k - 1], current[k] = right, left
                letters.append(sigma(k))
                break
    return Word(n, tuple(letters))


def gen_right_divides(k: int, s: SimpleElement) -> bool:
    """True iff s = s' s_k with lengths adding, i.e. k is a right descent."""
    return s.perm[k - 1] > s.perm[k]


def gen_left_extends_simple(k: int, s: SimpleElement) -> bool:
    """True iff s_k s is again simple: strands k and k + 1 do not cross in s."""
    return s.position_of(k) < s.position_of(k + 1)


def strip_right(k: int, s: SimpleElement) -> SimpleElement:
    """s s_k^{-1}; only meaningful when ``gen_right_divides(k, s)``."""
    perm = list(s.perm)
    perm[k - 1], perm[k] = perm[k], perm[k - 1]
    return SimpleElement(tuple(perm))


def right_divides_word(indices: Sequence[int], s: SimpleElement) -> bool:
    """True iff s_{i1} ... s_{ir} is a right divisor of s (lengths adding)."""
    current = s
    for k in reversed(indices):
        if not gen_right_divides(k, current):
            return False
        current = strip_right(k, current)
    return True


def flip_simple(s: SimpleElement) -> SimpleElement:
    """Conjugation by the half twist: s_i <-> s_{n-i}."""
    n = s.n
    return SimpleElement(tuple(n + 1 - s.perm[n - p] for p in range(1, n + 1)))


def transport_singular(i: int, s: SimpleElement) -> int | None:
    """
    Index j with x_i s = s x_j, or None.

    x_i slides through s iff the strands starting at positions i and i + 1
    end next to each other; it then becomes x_j with j the smaller end position.
    """
    a, b = s.position_of(i), s.position_of(i + 1)
    if abs(a - b) != 1:
        return None
    return min(a, b)
