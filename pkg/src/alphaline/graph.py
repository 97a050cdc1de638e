"""Immutable simple graphs and the line-graph transform.

Vertices are dense indices ``0..n-1``. Edges are stored as sorted
``(min, max)`` pairs in sorted order, which also fixes the vertex numbering
of line graphs: vertex ``i`` of ``L(G)`` is edge ``i`` of ``G``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple


class GraphError(ValueError):
    """Invalid graph construction input."""


class SelfLoopError(GraphError):
    pass


class VertexRangeError(GraphError):
    pass


class EdgeLabel(NamedTuple):
    """Vertex ``index`` of a line graph and the edge of the source graph it names."""

    index: int
    endpoints: tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on vertices ``0..n-1``.

    Build instances with :func:`build_graph`, which normalizes and deduplicates
    the edge list. The constructor itself only accepts canonical input.
    """

    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise GraphError(f"vertex count must be non-negative, got {self.n}")
        prev = None
        for e in self.edges:
            u, v = e
            if u == v:
                raise SelfLoopError(f"self-loop ({u}, {v})")
            if not (0 <= u < v < self.n):
                raise VertexRangeError(f"edge {e} is not a canonical pair below n={self.n}")
            if prev is not None and e <= prev:
                raise GraphError("edges must be sorted and unique; use build_graph")
            prev = e

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        nbrs: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    @cached_property
    def masks(self) -> tuple[int, ...]:
        """Neighborhood of each vertex as an int bitset."""
        out = [0] * self.n
        for u, v in self.edges:
            out[u] |= 1 << v
            out[v] |= 1 << u
        return tuple(out)

    @cached_property
    def edge_index(self) -> dict[tuple[int, int], int]:
        return {e: i for i, e in enumerate(self.edges)}

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edge_index

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def isolated_vertices(self) -> list[int]:
        return [v for v in range(self.n) if not self.adjacency[v]]

    def edge_list(self) -> list[tuple[int, int]]:
        return list(self.edges)

    def without_edge(self, u: int, v: int) -> Graph:
        e = (min(u, v), max(u, v))
        if e not in self.edge_index:
            raise GraphError(f"edge {e} not in graph")
        return Graph(self.n, tuple(f for f in self.edges if f != e))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(n: int, edge_list: Iterable[tuple[int, int]]) -> Graph:
    """Validate ``edge_list`` and return the graph on ``n`` vertices.

    Duplicate pairs, in either orientation, are collapsed.

    Raises
    ------
    GraphError
        If ``n < 1``.
    SelfLoopError
        If some pair is ``(u, u)``.
    VertexRangeError
        If an endpoint lies outside ``0..n-1``.
    """
    if n < 1:
        raise GraphError(f"vertex count must be >= 1, got {n}")
    seen: set[tuple[int, int]] = set()
    for pair in edge_list:
        u, v = (int(x) for x in pair)
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}: pair ({u}, {v})")
        if not (0 <= u < n and 0 <= v < n):
            raise VertexRangeError(f"pair ({u}, {v}) has an endpoint outside 0..{n - 1}")
        seen.add((u, v) if u < v else (v, u))
    return Graph(n, tuple(sorted(seen)))


def degree_sequence(g: Graph) -> list[int]:
    return [len(s) for s in g.adjacency]


def line_graph(g: Graph) -> tuple[Graph, list[EdgeLabel]]:
    """Return ``L(g)`` together with the vertex-to-edge label table.

    Two vertices of ``L(g)`` are adjacent iff the corresponding edges of ``g``
    share an endpoint. Isolated vertices of ``g`` contribute nothing.
    """
    labels = [EdgeLabel(i, e) for i, e in enumerate(g.edges)]
    incident: list[list[int]] = [[] for _ in range(g.n)]
    for i, (u, v) in enumerate(g.edges):
        incident[u].append(i)
        incident[v].append(i)
    pairs: set[tuple[int, int]] = set()
    for inc in incident:
        for a in range(len(inc)):
            for b in range(a + 1, len(inc)):
                pairs.add((inc[a], inc[b]))
    return Graph(g.m, tuple(sorted(pairs))), labels
