from __future__ import annotations

import logging
import time
from dataclasses import dataclass

from ..errors import ResourceLimitError
from ..words import MonoidKind, Presentation, RewriteTable, Word
from . import cache
from .config import DEFAULT_ORACLE_CONFIG, OracleConfig

logger = logging.getLogger(__name__)

Codes = tuple[int, ...]


@dataclass(frozen=True)
class LengthCensus:
    """Number of congruence classes of each word length 0..kmax."""

    n: int
    kind: MonoidKind
    counts: tuple[int, ...]

    @property
    def kmax(self) -> int:
        return len(self.counts) - 1

    def __getitem__(self, k: int) -> int:
        return self.counts[k]

    def truncated(self, kmax: int) -> LengthCensus:
        return LengthCensus(self.n, self.kind, self.counts[: kmax + 1])


def _rank(word: Codes, m: int) -> int:
    r = 0
    for c in word:
        r = r * m + c
    return r


def _unrank(rank: int, m: int, k: int) -> Codes:
    digits = [0] * k
    for i in range(k - 1, -1, -1):
        rank, digits[i] = divmod(rank, m)
    return tuple(digits)


def _check_budget(m: int, lengths: range, budget: int) -> None:
    required = sum(m**k for k in lengths)
    if required > budget:
        raise ResourceLimitError(required, budget)


def _scan_length(table: RewriteTable, k: int, collect: bool) -> tuple[int, list[Codes]]:
    """
    Partition all words of length k into classes.

    Words are visited in increasing rank, which is lexicographic order, so the
    first word met in each class is its smallest member.
    """
    m = table.alphabet_size
    visited = bytearray(m**k)
    classes = 0
    representatives: list[Codes] = []
    for rank in range(len(visited)):
        if visited[rank]:
            continue
        classes += 1
        start = _unrank(rank, m, k)
        if collect:
            representatives.append(start)
        visited[rank] = 1
        stack = [start]
        while stack:
            for v in table.neighbors(stack.pop()):
                r = _rank(v, m)
                if not visited[r]:
                    visited[r] = 1
                    stack.append(v)
    return classes, representatives


def count_by_length(
    presentation: Presentation,
    kmax: int,
    config: OracleConfig = DEFAULT_ORACLE_CONFIG,
) -> LengthCensus:
    n, kind = presentation.n, presentation.kind
    if config.use_cache:
        hit = cache.census_get(n, kind.value, kmax)
        if hit is not None:
            return hit

    _check_budget(presentation.alphabet_size, range(kmax + 1), config.word_budget)
    table = RewriteTable(presentation)
    started = time.perf_counter()
    counts = tuple(_scan_length(table, k, collect=False)[0] for k in range(kmax + 1))
    logger.info(
        "Oracle census n=%d kind=%s kmax=%d took %.1f ms",
        n, kind.value, kmax, (time.perf_counter() - started) * 1000,
    )
    census = LengthCensus(n=n, kind=kind, counts=counts)
    if config.use_cache:
        cache.census_set(census)
    return census


def enumerate_classes(
    presentation: Presentation,
    k: int,
    config: OracleConfig = DEFAULT_ORACLE_CONFIG,
) -> list[Word]:
    """Lexicographically smallest representative of every class of length k, sorted."""
    _check_budget(presentation.alphabet_size, range(k, k + 1), config.word_budget)
    _, reps = _scan_length(RewriteTable(presentation), k, collect=True)
    return [Word.from_codes(r, presentation.n) for r in reps]


def _closure(
    start: Codes,
    table: RewriteTable,
    budget: int,
    target: Codes | None = None,
) -> set[Codes]:
    seen = {start}
    stack = [start]
    while stack:
        for v in table.neighbors(stack.pop()):
            if v in seen:
                continue
            if v == target:
                seen.add(v)
                return seen
            seen.add(v)
            if len(seen) > budget:
                raise ResourceLimitError(len(seen), budget)
            stack.append(v)
    return seen


def class_of(
    word: Word,
    presentation: Presentation,
    config: OracleConfig = DEFAULT_ORACLE_CONFIG,
) -> list[Word]:
    """Every word congruent to ``word``, in lexicographic order."""
    members = _closure(word.codes(), RewriteTable(presentation), config.word_budget)
    return [Word.from_codes(c, presentation.n) for c in sorted(members)]


def are_equivalent(
    w1: Word,
    w2: Word,
    presentation: Presentation,
    config: OracleConfig = DEFAULT_ORACLE_CONFIG,
) -> bool:
    # all relations preserve length
    if len(w1) != len(w2):
        return False
    a, b = w1.codes(), w2.codes()
    if a == b:
        return True
    return b in _closure(a, RewriteTable(presentation), config.word_budget, target=b)
