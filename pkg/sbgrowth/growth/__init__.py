"""
Growth series assembly and analysis.

Responsibilities:
- Turn the normal-form automaton into a linear system over Q(t) and solve it.
- Assemble the full growth series from the per-syllable solutions and Delta.
- Isolate real roots of the denominator and derive growth rate and residues.
- Analyse the cubic factor through its depressed form.
"""
from __future__ import annotations

from .analysis import CubicAnalysis, GrowthReport, cubic_analysis, growth_report
from .config import DEFAULT_GROWTH_CONFIG, GrowthConfig
from .roots import RealRoot, count_roots, isolate_real_roots, real_roots, sturm_sequence
from .system import GeneratingFunction, build_system, generating_function

__all__ = [
    "DEFAULT_GROWTH_CONFIG",
    "CubicAnalysis",
    "GeneratingFunction",
    "GrowthConfig",
    "GrowthReport",
    "RealRoot",
    "build_system",
    "count_roots",
    "cubic_analysis",
    "generating_function",
    "growth_report",
    "isolate_real_roots",
    "real_roots",
    "sturm_sequence",
]
