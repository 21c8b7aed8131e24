from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class GrowthConfig:
    tol: float = 1e-12
    precision_dps: int = 50
    # systems with more unknowns are solved through their series expansion
    direct_solve_limit: int = 12
    verify_solutions: bool = True


DEFAULT_GROWTH_CONFIG = GrowthConfig()
