from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from typing import Iterable

from ..errors import InvalidStrandCountError, InvalidWordError


class MonoidKind(str, Enum):
    CLASSICAL = "classical"
    SINGULAR = "singular"


class GeneratorKind(str, Enum):
    SIGMA = "sigma"
    X = "x"


@dataclass(frozen=True)
class Generator:
    kind: GeneratorKind
    index: int

    @property
    def sort_key(self) -> tuple[int, int]:
        # sigma_1 < ... < sigma_{n-1} < x_1 < ... < x_{n-1}
        return (0 if self.kind is GeneratorKind.SIGMA else 1, self.index)

    def code(self, n: int) -> int:
        if self.kind is GeneratorKind.SIGMA:
            return self.index - 1
        return n - 1 + self.index - 1

    @classmethod
    def from_code(cls, code: int, n: int) -> Generator:
        if code < n - 1:
            return cls(GeneratorKind.SIGMA, code + 1)
        return cls(GeneratorKind.X, code - (n - 1) + 1)

    def __str__(self) -> str:
        prefix = "s" if self.kind is GeneratorKind.SIGMA else "x"
        return f"{prefix}{self.index}"


def sigma(i: int) -> Generator:
    return Generator(GeneratorKind.SIGMA, i)


def x(i: int) -> Generator:
    return Generator(GeneratorKind.X, i)


_TOKEN = re.compile(r"\s*([sSσxX])\s*(\d+)")


@dataclass(frozen=True)
class Word:
    """A finite sequence of generators of the n-strand monoid."""

    n: int
    letters: tuple[Generator, ...] = ()

    def __post_init__(self) -> None:
        if self.n < 2:
            raise InvalidStrandCountError(self.n)
        for g in self.letters:
            if not 1 <= g.index <= self.n - 1:
                raise InvalidWordError(f"generator {g} is not defined on {self.n} strands")

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __str__(self) -> str:
        return "".join(str(g) for g in self.letters) or "1"

    def __add__(self, other: Word) -> Word:
        if other.n != self.n:
            raise InvalidWordError("cannot concatenate words on different strand counts")
        return Word(self.n, self.letters + other.letters)

    def codes(self) -> tuple[int, ...]:
        return tuple(g.code(self.n) for g in self.letters)

    @classmethod
    def from_codes(cls, codes: Iterable[int], n: int) -> Word:
        return cls(n, tuple(Generator.from_code(c, n) for c in codes))

    @classmethod
    def of(cls, n: int, *letters: Generator) -> Word:
        return cls(n, tuple(letters))

    @classmethod
    def parse(cls, text: str, n: int) -> Word:
        """Parse ``"s1 s2 x1"``, ``"s1s2x1"`` or ``"σ1σ2x1"``; ``"1"`` or ``""`` is the empty word."""
        stripped = text.strip()
        if stripped in ("", "1", "e"):
            return cls(n)
        letters: list[Generator] = []
        pos = 0
        while pos < len(stripped):
            m = _TOKEN.match(stripped, pos)
            if m is None:
                raise InvalidWordError(f"cannot parse word {text!r} at offset {pos}")
            kind = GeneratorKind.X if m.group(1) in "xX" else GeneratorKind.SIGMA
            letters.append(Generator(kind, int(m.group(2))))
            pos = m.end()
            while pos < len(stripped) and stripped[pos] in " ,.*":
                pos += 1
        return cls(n, tuple(letters))


Relation = tuple[Word, Word]


@dataclass(frozen=True)
class Presentation:
    n: int
    kind: MonoidKind
    relations: tuple[Relation, ...]

    @property
    def generators(self) -> tuple[Generator, ...]:
        gens = [sigma(i) for i in range(1, self.n)]
        if self.kind is MonoidKind.SINGULAR:
            gens.extend(x(i) for i in range(1, self.n))
        return tuple(gens)

    @property
    def alphabet_size(self) -> int:
        return len(self.generators)


def build_presentation(n: int, kind: MonoidKind = MonoidKind.SINGULAR) -> Presentation:
    """
    Relations of the positive braid monoid (classical) or of the positive
    singular braid monoid (singular) on n strands.

    Families, for 1 <= i, j <= n-1:
    - s_i s_j = s_j s_i, |i-j| > 1
    - s_i s_{i+1} s_i = s_{i+1} s_i s_{i+1}
    and for the singular kind additionally
    - x_i x_j = x_j x_i, |i-j| > 1
    - x_i s_j = s_j x_i, |i-j| != 1
    - s_i s_{i+1} x_i = x_{i+1} s_i s_{i+1}
    - s_{i+1} s_i x_{i+1} = x_i s_{i+1} s_i
    """
    if n < 2:
        raise InvalidStrandCountError(n)
    kind = MonoidKind(kind)

    def w(*letters: Generator) -> Word:
        return Word(n, letters)

    rels: list[Relation] = []
    idx = range(1, n)
    for i in idx:
        for j in idx:
            if j > i + 1:
                rels.append((w(sigma(i), sigma(j)), w(sigma(j), sigma(i))))
    for i in range(1, n - 1):
        rels.append((w(sigma(i), sigma(i + 1), sigma(i)), w(sigma(i + 1), sigma(i), sigma(i + 1))))

    if kind is MonoidKind.SINGULAR:
        for i in idx:
            for j in idx:
                if j > i + 1:
                    rels.append((w(x(i), x(j)), w(x(j), x(i))))
        for i in idx:
            for j in idx:
                if abs(i - j) != 1:
                    rels.append((w(x(i), sigma(j)), w(sigma(j), x(i))))
        for i in range(1, n - 1):
            rels.append((w(sigma(i), sigma(i + 1), x(i)), w(x(i + 1), sigma(i), sigma(i + 1))))
            rels.append((w(sigma(i + 1), sigma(i), x(i + 1)), w(x(i), sigma(i + 1), sigma(i))))

    return Presentation(n=n, kind=kind, relations=tuple(rels))


def flip_generator(g: Generator, n: int) -> Generator:
    return Generator(g.kind, n - g.index)


def flip(word: Word) -> Word:
    """Apply the involution s_i <-> s_{n-i}, x_i <-> x_{n-i} letterwise."""
    return Word(word.n, tuple(flip_generator(g, word.n) for g in word.letters))
