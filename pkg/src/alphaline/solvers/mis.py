"""Exact maximum independent set by branch and bound.

Vertex sets are Python ints used as bitsets, so there is no fixed size cap.
At each node:

1. vertices of degree 0 or 1 in the remaining subgraph are taken greedily
   (some maximum independent set always contains them);
2. the node is pruned when ``size + upper_bound <= best``, where the upper bound
   is the smaller of ``k - ceil(e / max_degree)`` and a greedy clique cover;
3. otherwise the search branches on a maximum-degree vertex (lowest index on
   ties), first including it, then excluding it.
"""

from __future__ import annotations

import os
import sys
import time

from ..graph import Graph
from .result import BudgetExhausted, SolveResult

DEFAULT_BUDGET = 10_000_000


def default_budget() -> int:
    env = os.environ.get("ALPHALINE_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _greedy_mis(adj: list[int], cand: int) -> int:
    """Min-degree greedy independent set inside ``cand``."""
    chosen = 0
    while cand:
        v = min(_bits(cand), key=lambda u: ((adj[u] & cand).bit_count(), u))
        chosen |= 1 << v
        cand &= ~(adj[v] | (1 << v))
    return chosen


def _clique_cover_bound(adj: list[int], cand: int) -> int:
    count = 0
    while cand:
        v = (cand & -cand).bit_length() - 1
        clique_cand = adj[v] & cand
        cand &= ~(1 << v)
        while clique_cand:
            w = (clique_cand & -clique_cand).bit_length() - 1
            cand &= ~(1 << w)
            clique_cand &= adj[w]
        count += 1
    return count


class _Search:
    def __init__(self, adj: list[int], budget: int):
        self.adj = adj
        self.budget = budget
        self.nodes = 0
        self.best = 0
        self.best_size = 0

    def upper_bound(self, cand: int, k: int) -> int:
        adj = self.adj
        degs = [(adj[v] & cand).bit_count() for v in _bits(cand)]
        max_deg = max(degs)
        if max_deg == 0:
            return k
        edges = sum(degs) // 2
        degree_bound = k - (edges + max_deg - 1) // max_deg
        if degree_bound <= 1:
            return degree_bound
        return min(degree_bound, _clique_cover_bound(adj, cand))

    def run(self, cand: int, chosen: int, size: int) -> None:
        self.nodes += 1
        if self.nodes > self.budget:
            raise _OutOfBudget
        adj = self.adj
        # take degree <= 1 vertices until none remain
        changed = True
        while changed and cand:
            changed = False
            for v in _bits(cand):
                if (cand >> v) & 1 and (adj[v] & cand).bit_count() <= 1:
                    chosen |= 1 << v
                    size += 1
                    cand &= ~(adj[v] | (1 << v))
                    changed = True
        if not cand:
            if size > self.best_size:
                self.best, self.best_size = chosen, size
            return
        k = cand.bit_count()
        if size + self.upper_bound(cand, k) <= self.best_size:
            return
        v = max(_bits(cand), key=lambda u: ((adj[u] & cand).bit_count(), -u))
        self.run(cand & ~(adj[v] | (1 << v)), chosen | (1 << v), size + 1)
        self.run(cand & ~(1 << v), chosen, size)


class _OutOfBudget(Exception):
    pass


def mis_exact(g: Graph, budget: int | None = None) -> SolveResult:
    """Maximum independent set of ``g``.

    Raises
    ------
    BudgetExhausted
        When more than ``budget`` search nodes are needed (default
        ``ALPHALINE_BUDGET`` or 10**7). The exception carries the best
        independent set found so far.
    """
    budget = default_budget() if budget is None else budget
    t0 = time.perf_counter()
    adj = list(g.masks)
    full = (1 << g.n) - 1
    search = _Search(adj, budget)
    search.best = _greedy_mis(adj, full)
    search.best_size = search.best.bit_count()
    limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(limit, 4 * g.n + 100))
    try:
        search.run(full, 0, 0)
        exhausted = False
    except _OutOfBudget:
        exhausted = True
    finally:
        sys.setrecursionlimit(limit)
    result = SolveResult(
        search.best_size,
        tuple(_bits(search.best)),
        stats={"nodes": search.nodes},
        elapsed=time.perf_counter() - t0,
    )
    if exhausted:
        raise BudgetExhausted(budget, result)
    return result
