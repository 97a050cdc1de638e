from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


class SolverError(RuntimeError):
    pass


class SizeLimitError(SolverError, ValueError):
    """Instance too large for an exhaustive oracle."""


class BudgetExhausted(SolverError):
    """Branch-and-bound hit its node budget before proving optimality.

    ``best`` holds the best solution found so far, which is a valid lower
    bound but not a certified optimum.
    """

    def __init__(self, budget: int, best: SolveResult):
        super().__init__(f"node budget {budget} exhausted; best lower bound {best.value}")
        self.budget = budget
        self.best = best


@dataclass(frozen=True)
class SolveResult:
    """Optimal value plus an explicit witness.

    ``witness`` is a sorted tuple of vertices for independent-set solvers and a
    sorted tuple of ``(u, v)`` edges for matching solvers.
    """

    value: int
    witness: tuple
    stats: dict[str, Any] = field(default_factory=dict)
    elapsed: float = 0.0
    perfect: bool | None = None
