"""Exhaustive oracles for alpha and nu on small graphs."""

from __future__ import annotations

import time

import numpy as np

from ..graph import Graph
from . import _kernels
from .result import SizeLimitError, SolveResult

MAX_BRUTEFORCE_VERTICES = 25
MAX_BRUTEFORCE_EDGES = 25


def mis_bruteforce(g: Graph) -> SolveResult:
    """Maximum independent set by enumerating all ``2**n`` vertex subsets."""
    if g.n > MAX_BRUTEFORCE_VERTICES:
        raise SizeLimitError(
            f"mis_bruteforce supports at most {MAX_BRUTEFORCE_VERTICES} vertices, got {g.n}"
        )
    t0 = time.perf_counter()
    occupy = np.array([1 << v for v in range(g.n)], dtype=np.int64)
    forbid = np.zeros(g.n, dtype=np.int64)
    for u, v in g.edges:
        forbid[u] |= 1 << v
        forbid[v] |= 1 << u
    value, mask = _kernels.packing_max(occupy, forbid)
    witness = tuple(v for v in range(g.n) if (mask >> v) & 1)
    return SolveResult(
        value,
        witness,
        stats={"subsets": 1 << g.n, "backend": _kernels.BACKEND},
        elapsed=time.perf_counter() - t0,
    )


def matching_bruteforce(g: Graph) -> SolveResult:
    """Maximum matching by enumerating all ``2**|E|`` edge subsets."""
    if g.m > MAX_BRUTEFORCE_EDGES:
        raise SizeLimitError(
            f"matching_bruteforce supports at most {MAX_BRUTEFORCE_EDGES} edges, got {g.m}"
        )
    t0 = time.perf_counter()
    # relabel touched vertices densely so endpoint masks fit in 63 bits
    touched = sorted({x for e in g.edges for x in e})
    slot = {v: i for i, v in enumerate(touched)}
    occupy = np.array([(1 << slot[u]) | (1 << slot[v]) for u, v in g.edges], dtype=np.int64)
    value, mask = _kernels.packing_max(occupy, occupy)
    witness = tuple(e for i, e in enumerate(g.edges) if (mask >> i) & 1)
    return SolveResult(
        value,
        witness,
        stats={"subsets": 1 << g.m, "backend": _kernels.BACKEND},
        elapsed=time.perf_counter() - t0,
        perfect=2 * value == g.n,
    )
