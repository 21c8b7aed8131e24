from __future__ import annotations


class SBGrowthError(Exception):
    """Base class for every error raised by sbgrowth."""


class InvalidStrandCountError(SBGrowthError, ValueError):
    def __init__(self, n: int, max_strands: int | None = None) -> None:
        self.n = n
        self.max_strands = max_strands
        bound = f"2..{max_strands}" if max_strands is not None else ">= 2"
        super().__init__(f"strand count n={n} outside supported range {bound}")


class InvalidWordError(SBGrowthError, ValueError):
    pass


class ResourceLimitError(SBGrowthError):
    def __init__(self, required: int, budget: int) -> None:
        self.required = required
        self.budget = budget
        super().__init__(
            f"oracle would scan {required} words, over the configured budget of {budget} "
            "(raise SBGROWTH_WORD_BUDGET to allow it)"
        )


class SingularMatrixError(SBGrowthError, ArithmeticError):
    pass


class ZeroDivisorError(SBGrowthError, ZeroDivisionError):
    pass


class PoleAtOriginError(SBGrowthError, ArithmeticError):
    pass


class RepeatedPoleError(SBGrowthError, ArithmeticError):
    pass


class NotCubicError(SBGrowthError, ValueError):
    pass


class InsufficientTermsError(SBGrowthError):
    pass
