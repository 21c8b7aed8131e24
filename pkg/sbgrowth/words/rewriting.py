from __future__ import annotations

from collections import defaultdict
from typing import Iterator

from .generators import Presentation, Word

Codes = tuple[int, ...]


class RewriteTable:
    """
    Relations of a presentation indexed by the first letter of each side.

    Every relation u = v is stored in both directions, so a single pass over a
    word yields all words one elementary rewrite away.
    """

    def __init__(self, presentation: Presentation) -> None:
        self.n = presentation.n
        self.alphabet_size = presentation.alphabet_size
        self._rules: dict[int, list[tuple[Codes, Codes]]] = defaultdict(list)
        for lhs, rhs in presentation.relations:
            a, b = lhs.codes(), rhs.codes()
            self._rules[a[0]].append((a, b))
            self._rules[b[0]].append((b, a))

    def neighbors(self, word: Codes) -> Iterator[Codes]:
        for pos, letter in enumerate(word):
            for lhs, rhs in self._rules.get(letter, ()):
                end = pos + len(lhs)
                if word[pos:end] == lhs:
                    yield word[:pos] + rhs + word[end:]


def rewrite_neighbors(word: Word, presentation: Presentation) -> frozenset[Word]:
    """All words obtained from ``word`` by one relation application at one position."""
    table = RewriteTable(presentation)
    return frozenset(Word.from_codes(c, word.n) for c in table.neighbors(word.codes()))
