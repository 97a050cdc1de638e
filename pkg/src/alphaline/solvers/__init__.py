"""Exact solvers for alpha(G), nu(G) and alpha(L(G)), plus brute-force oracles."""

from __future__ import annotations

import time

from ..graph import Graph, line_graph
from .blossom import max_matching
from .bruteforce import (
    MAX_BRUTEFORCE_EDGES,
    MAX_BRUTEFORCE_VERTICES,
    matching_bruteforce,
    mis_bruteforce,
)
from .mis import DEFAULT_BUDGET, default_budget, mis_exact
from .result import BudgetExhausted, SizeLimitError, SolveResult, SolverError
from .witness import is_independent_set, is_matching, is_perfect_matching

__all__ = [
    "BudgetExhausted",
    "DEFAULT_BUDGET",
    "MAX_BRUTEFORCE_EDGES",
    "MAX_BRUTEFORCE_VERTICES",
    "SizeLimitError",
    "SolveResult",
    "SolverError",
    "alpha_line",
    "default_budget",
    "is_independent_set",
    "is_matching",
    "is_perfect_matching",
    "matching_bruteforce",
    "max_matching",
    "mis_bruteforce",
    "mis_exact",
]


def alpha_line(g: Graph, budget: int | None = None) -> SolveResult:
    """Independence number of the line graph, with the witness mapped back to edges of ``g``.

    The returned witness is a tuple of ``g``'s edges; it is a matching of ``g``.
    """
    t0 = time.perf_counter()
    lg, labels = line_graph(g)
    try:
        res = mis_exact(lg, budget)
    except BudgetExhausted as exc:
        best = exc.best
        mapped = SolveResult(
            best.value,
            tuple(sorted(labels[i].endpoints for i in best.witness)),
            stats={**best.stats, "line_vertices": lg.n, "line_edges": lg.m},
            elapsed=time.perf_counter() - t0,
        )
        raise BudgetExhausted(exc.budget, mapped) from None
    return SolveResult(
        res.value,
        tuple(sorted(labels[i].endpoints for i in res.witness)),
        stats={**res.stats, "line_vertices": lg.n, "line_edges": lg.m},
        elapsed=time.perf_counter() - t0,
    )
