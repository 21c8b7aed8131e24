"""
Brute-force congruence oracle.

Responsibilities:
- Count congruence classes of positive words by length, by exhaustive closure.
- List the lexicographically least representative of every class of a given length.
- Decide whether two words are congruent.
- Refuse work above the configured word budget.
"""
from __future__ import annotations

from .cache import clear_cache, get_cache_stats
from .census import LengthCensus, are_equivalent, class_of, count_by_length, enumerate_classes
from .config import DEFAULT_ORACLE_CONFIG, OracleConfig

__all__ = [
    "DEFAULT_ORACLE_CONFIG",
    "LengthCensus",
    "OracleConfig",
    "are_equivalent",
    "class_of",
    "clear_cache",
    "count_by_length",
    "enumerate_classes",
    "get_cache_stats",
]
