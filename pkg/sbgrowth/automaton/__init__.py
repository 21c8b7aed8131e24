"""
Syllable automaton for normal forms.

Responsibilities:
- Order the simple elements and build the syllable alphabet.
- Decide the predecessor relation between syllables (the epsilon matrix).
- Refine syllables by x-context into a minimal block automaton.
- Count normal forms by length with a dynamic program over the blocks.
"""
from __future__ import annotations

from .config import DEFAULT_AUTOMATON_CONFIG, AutomatonConfig
from .normal_form import (
    NormalFormAutomaton,
    NormalFormBlock,
    State,
    count_via_dp,
    normal_form_automaton,
)
from .predecessors import EpsilonMatrix, epsilon_matrix, pred_set, precedes
from .syllables import Syllable, alphabet, flip_syllable, simples_list, syllable_by_id

__all__ = [
    "DEFAULT_AUTOMATON_CONFIG",
    "AutomatonConfig",
    "EpsilonMatrix",
    "NormalFormAutomaton",
    "NormalFormBlock",
    "State",
    "Syllable",
    "alphabet",
    "count_via_dp",
    "epsilon_matrix",
    "flip_syllable",
    "normal_form_automaton",
    "pred_set",
    "precedes",
    "simples_list",
    "syllable_by_id",
]
