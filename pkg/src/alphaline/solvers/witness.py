"""Independent witness checks.

These read only the graph's edge list, never any solver state.
"""

from __future__ import annotations

from collections.abc import Iterable

from ..graph import Graph


def is_independent_set(g: Graph, vertices: Iterable[int]) -> bool:
    vs = list(vertices)
    if len(set(vs)) != len(vs) or any(not 0 <= v < g.n for v in vs):
        return False
    chosen = set(vs)
    return not any(u in chosen and v in chosen for u, v in g.edges)


def is_matching(g: Graph, edges: Iterable[tuple[int, int]]) -> bool:
    es = [tuple(sorted(e)) for e in edges]
    edge_set = set(g.edges)
    if len(set(es)) != len(es) or any(e not in edge_set for e in es):
        return False
    endpoints = [x for e in es for x in e]
    return len(endpoints) == len(set(endpoints))


def is_perfect_matching(g: Graph, edges: Iterable[tuple[int, int]]) -> bool:
    es = list(edges)
    covered = {x for e in es for x in e}
    return is_matching(g, es) and len(covered) == g.n
