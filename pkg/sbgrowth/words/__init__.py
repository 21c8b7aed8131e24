"""
Words, presentations and simple elements.

Responsibilities:
- Represent generators s_i, x_i and finite words over them.
- Build the defining relations of the classical and singular positive braid monoids.
- Enumerate one-step rewrites of a word (used by the brute-force oracle).
- Model simple elements as permutations: length, shortlex word, divisibility tests.
"""
from __future__ import annotations

from .generators import (
    Generator,
    GeneratorKind,
    MonoidKind,
    Presentation,
    Word,
    build_presentation,
    flip,
    sigma,
    x,
)
from .rewriting import RewriteTable, rewrite_neighbors
from .simples import (
    SimpleElement,
    flip_simple,
    gen_left_extends_simple,
    gen_right_divides,
    inversions,
    right_divides_word,
    simple_to_word,
    transport_singular,
)

__all__ = [
    "Generator",
    "GeneratorKind",
    "MonoidKind",
    "Presentation",
    "RewriteTable",
    "SimpleElement",
    "Word",
    "build_presentation",
    "flip",
    "flip_simple",
    "gen_left_extends_simple",
    "gen_right_divides",
    "inversions",
    "rewrite_neighbors",
    "right_divides_word",
    "sigma",
    "simple_to_word",
    "transport_singular",
    "x",
]
