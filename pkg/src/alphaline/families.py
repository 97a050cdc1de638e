"""Generators for the graph families with closed-form predictions.

Canonical vertex layouts (all 0-based):

complete            ``K_n``: all pairs of ``0..n-1``.
complete_bipartite  ``K_{m,n}``: parts ``0..m-1`` and ``m..m+n-1``.
path                ``P_n``: ``0-1-...-(n-1)``.
cycle               ``C_n``: path plus ``(n-1, 0)``.
wheel               ``W_{n+1}``: cycle on ``0..n-1``, hub ``n``.
helm                ``H_n``: wheel, plus pendant ``n+1+i`` on rim vertex ``i``.
fan                 ``F_{1,n}``: path on ``0..n-1``, hub ``n``.
sun                 ``S_n`` (complete sun): clique on ``0..n-1``; vertex ``n+i``
                    adjacent to ``i`` and ``(i+1) % n``.
sunlet              ``L_n``: cycle on ``0..n-1``, pendant ``n+i`` on ``i``.
armed_crown         ``AC(m, n)``: cycle on ``0..n-1``; cycle vertex ``i`` starts an
                    arm ``i, n+i(m-1), ..., n+i(m-1)+m-2`` that is a path on
                    ``m`` vertices counting ``i`` itself.

The text-form grammar used by the CLI is ``name:key=value,key=value``, e.g.
``wheel:n=5`` or ``armed_crown:m=3,n=5``. Ranges use ``lo..hi`` (inclusive):
``armed_crown:m=2..5,n=3..6``.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from enum import Enum

from .graph import Graph, build_graph


class Family(str, Enum):
    COMPLETE = "complete"
    COMPLETE_BIPARTITE = "complete_bipartite"
    PATH = "path"
    CYCLE = "cycle"
    WHEEL = "wheel"
    HELM = "helm"
    FAN = "fan"
    SUN = "sun"
    SUNLET = "sunlet"
    ARMED_CROWN = "armed_crown"


# parameter name -> minimum value
_BOUNDS: dict[Family, dict[str, int]] = {
    Family.COMPLETE: {"n": 1},
    Family.COMPLETE_BIPARTITE: {"m": 1, "n": 1},
    Family.PATH: {"n": 2},
    Family.CYCLE: {"n": 3},
    Family.WHEEL: {"n": 3},
    Family.HELM: {"n": 3},
    Family.FAN: {"n": 1},
    Family.SUN: {"n": 3},
    Family.SUNLET: {"n": 3},
    Family.ARMED_CROWN: {"m": 2, "n": 3},
}


class FamilyParamError(ValueError):
    """A family parameter is missing, unknown or out of range."""


@dataclass(frozen=True, order=True)
class FamilySpec:
    family: Family
    params: tuple[tuple[str, int], ...] = field(default=())

    def __post_init__(self) -> None:
        bounds = _BOUNDS[self.family]
        given = dict(self.params)
        if set(given) != set(bounds):
            raise FamilyParamError(
                f"{self.family.value} takes parameters {sorted(bounds)}, got {sorted(given)}"
            )
        for name, lo in bounds.items():
            if given[name] < lo:
                raise FamilyParamError(
                    f"{self.family.value}: {name}={given[name]} violates {name} >= {lo}"
                )
        object.__setattr__(self, "params", tuple(sorted(given.items())))

    @classmethod
    def of(cls, family: Family | str, **params: int) -> FamilySpec:
        return cls(Family(family), tuple(params.items()))

    @classmethod
    def parse(cls, text: str) -> FamilySpec:
        specs = parse_family_range(text)
        if len(specs) != 1:
            raise FamilyParamError(f"expected a single family member, got a range: {text!r}")
        return specs[0]

    def __getitem__(self, name: str) -> int:
        return dict(self.params)[name]

    def get(self, name: str, default: int | None = None) -> int | None:
        return dict(self.params).get(name, default)

    def __str__(self) -> str:
        args = ",".join(f"{k}={v}" for k, v in self.params)
        return f"{self.family.value}:{args}"


_SPEC_RE = re.compile(r"^\s*([a-z_]+)\s*(?::\s*(.*))?$")


def parse_family_range(text: str) -> list[FamilySpec]:
    """Expand ``name:k=v,k=lo..hi`` into the list of member specs.

    The result is ordered by parameter tuple (``m`` before ``n``).
    """
    match = _SPEC_RE.match(text)
    if not match:
        raise FamilyParamError(f"cannot parse family spec {text!r}")
    name, rest = match.groups()
    try:
        family = Family(name)
    except ValueError:
        known = ", ".join(f.value for f in Family)
        raise FamilyParamError(f"unknown family {name!r}; known: {known}") from None
    ranges: dict[str, range] = {}
    for item in filter(None, (s.strip() for s in (rest or "").split(","))):
        key, sep, value = item.partition("=")
        key = key.strip()
        if not sep or not key:
            raise FamilyParamError(f"bad parameter {item!r} in {text!r}")
        try:
            if ".." in value:
                lo, hi = (int(x) for x in value.split(".."))
            else:
                lo = hi = int(value)
        except ValueError:
            raise FamilyParamError(f"bad parameter value {item!r} in {text!r}") from None
        if hi < lo:
            raise FamilyParamError(f"empty range {item!r} in {text!r}")
        ranges[key] = range(lo, hi + 1)
    keys = sorted(ranges)
    return [
        FamilySpec(family, tuple(zip(keys, combo)))
        for combo in itertools.product(*(ranges[k] for k in keys))
    ]


def _cycle_edges(n: int) -> list[tuple[int, int]]:
    return [(i, (i + 1) % n) for i in range(n)]


def _path_edges(n: int) -> list[tuple[int, int]]:
    return [(i, i + 1) for i in range(n - 1)]


def generate(spec: FamilySpec) -> Graph:
    """Build the family member described by ``spec`` (layouts in module docs)."""
    f, n = spec.family, spec["n"]
    if f is Family.COMPLETE:
        return build_graph(n, itertools.combinations(range(n), 2))
    if f is Family.COMPLETE_BIPARTITE:
        m = spec["m"]
        return build_graph(m + n, [(i, m + j) for i in range(m) for j in range(n)])
    if f is Family.PATH:
        return build_graph(n, _path_edges(n))
    if f is Family.CYCLE:
        return build_graph(n, _cycle_edges(n))
    if f is Family.WHEEL:
        return build_graph(n + 1, _cycle_edges(n) + [(i, n) for i in range(n)])
    if f is Family.HELM:
        edges = _cycle_edges(n) + [(i, n) for i in range(n)]
        edges += [(i, n + 1 + i) for i in range(n)]
        return build_graph(2 * n + 1, edges)
    if f is Family.FAN:
        return build_graph(n + 1, _path_edges(n) + [(i, n) for i in range(n)])
    if f is Family.SUN:
        edges = list(itertools.combinations(range(n), 2))
        for i in range(n):
            edges += [(n + i, i), (n + i, (i + 1) % n)]
        return build_graph(2 * n, edges)
    if f is Family.SUNLET:
        return build_graph(2 * n, _cycle_edges(n) + [(i, n + i) for i in range(n)])
    if f is Family.ARMED_CROWN:
        m = spec["m"]
        edges = _cycle_edges(n)
        for i in range(n):
            arm = [i] + [n + i * (m - 1) + j for j in range(m - 1)]
            edges += list(zip(arm, arm[1:]))
        return build_graph(n * m, edges)
    raise FamilyParamError(f"no generator for {f}")  # pragma: no cover
