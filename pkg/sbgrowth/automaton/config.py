from __future__ import annotations

import os
from dataclasses import dataclass
from pathlib import Path

from dotenv import load_dotenv

load_dotenv(Path(__file__).resolve().parent.parent.parent / ".env")


@dataclass(frozen=True)
class AutomatonConfig:
    """
    Limits for the syllable automaton.

    n! + n - 1 syllables and the block refinement grow quickly; n = 5 is
    still practical, n = 6 is not.
    """

    max_strands: int = int(os.getenv("SBGROWTH_MAX_STRANDS", "5"))


DEFAULT_AUTOMATON_CONFIG = AutomatonConfig()
