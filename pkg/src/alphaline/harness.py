"""Batch verification of the family formulas against the exact solvers."""

from __future__ import annotations

import csv
import io
import json
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from functools import partial
from typing import Any, Iterable, Sequence

import numpy as np

from .families import FamilySpec, generate, parse_family_range
from .formulas import Prediction, predict
from .graph import Graph, build_graph
from .solvers import (
    MAX_BRUTEFORCE_EDGES,
    MAX_BRUTEFORCE_VERTICES,
    BudgetExhausted,
    alpha_line,
    default_budget,
    is_independent_set,
    is_matching,
    matching_bruteforce,
    max_matching,
    mis_bruteforce,
    mis_exact,
)

logger = logging.getLogger(__name__)

DEFAULT_GRID: tuple[str, ...] = (
    "complete:n=3..12",
    "complete_bipartite:m=1..8,n=1..8",
    "wheel:n=3..12",
    "helm:n=3..12",
    "fan:n=3..12",
    "sun:n=3..12",
    "sunlet:n=3..12",
    "armed_crown:m=2..5,n=3..6",
)

REPORT_FORMATS = ("table", "csv", "json")

CSV_COLUMNS = (
    "family", "n", "alpha", "alpha_line", "sum", "product", "match",
    "m", "nu", "pred_alpha", "pred_alpha_line", "pred_sum", "pred_product",
    "oracle_alpha", "oracle_nu", "status", "vertices", "edges", "provenance",
)


class ReportError(ValueError):
    pass


@dataclass(frozen=True)
class RunConfig:
    families: tuple[str, ...] = DEFAULT_GRID
    budget: int = field(default_factory=default_budget)
    oracle: bool = True
    format: str = "table"
    seed: int = 0
    jobs: int = 1

    def __post_init__(self) -> None:
        if self.format not in REPORT_FORMATS:
            raise ValueError(f"format must be one of {REPORT_FORMATS}, got {self.format!r}")
        if self.budget < 1 or self.jobs < 1:
            raise ValueError("budget and jobs must be positive")
        for text in self.families:
            parse_family_range(text)

    def to_dict(self) -> dict[str, Any]:
        d = asdict(self)
        d["families"] = list(self.families)
        return d

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> RunConfig:
        return cls(**{**d, "families": tuple(d["families"])})


@dataclass(frozen=True)
class VerificationRecord:
    spec: FamilySpec
    predicted: Prediction
    vertices: int
    edges: int
    alpha: int | None = None
    nu: int | None = None
    alpha_line: int | None = None
    oracle_alpha: int | None = None
    oracle_nu: int | None = None
    witnesses_valid: bool = True
    status: str = "ok"
    stats: dict[str, Any] = field(default_factory=dict)
    elapsed: float = 0.0

    @property
    def flags(self) -> dict[str, bool]:
        """Every comparison that could be made for this row."""
        p = self.predicted
        out: dict[str, bool] = {"witnesses": self.witnesses_valid}
        if self.alpha is not None:
            out["alpha"] = self.alpha == p.alpha
        if self.alpha_line is not None:
            out["alpha_line"] = self.alpha_line == p.alpha_line
        if self.nu is not None:
            out["nu"] = self.nu == p.alpha_line
        if self.alpha_line is not None and self.nu is not None:
            out["line_equals_nu"] = self.alpha_line == self.nu
        if self.oracle_alpha is not None and self.alpha is not None:
            out["oracle_alpha"] = self.oracle_alpha == self.alpha
        if self.oracle_nu is not None and self.nu is not None:
            out["oracle_nu"] = self.oracle_nu == self.nu
        return out

    @property
    def failed(self) -> bool:
        return not all(self.flags.values())

    @property
    def skipped(self) -> bool:
        return self.status != "ok" and not self.failed

    @property
    def match(self) -> bool:
        return self.status == "ok" and not self.failed

    def to_dict(self) -> dict[str, Any]:
        return {
            "family": self.spec.family.value,
            "params": dict(self.spec.params),
            "predicted": self.predicted.to_dict(),
            "vertices": self.vertices,
            "edges": self.edges,
            "computed": {"alpha": self.alpha, "nu": self.nu, "alpha_line": self.alpha_line},
            "oracle": {"alpha": self.oracle_alpha, "nu": self.oracle_nu},
            "witnesses_valid": self.witnesses_valid,
            "status": self.status,
            "flags": self.flags,
            "match": self.match,
            "stats": self.stats,
            "elapsed": self.elapsed,
        }

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> VerificationRecord:
        return cls(
            spec=FamilySpec.of(d["family"], **d["params"]),
            predicted=Prediction.from_dict(d["predicted"]),
            vertices=d["vertices"],
            edges=d["edges"],
            alpha=d["computed"]["alpha"],
            nu=d["computed"]["nu"],
            alpha_line=d["computed"]["alpha_line"],
            oracle_alpha=d["oracle"]["alpha"],
            oracle_nu=d["oracle"]["nu"],
            witnesses_valid=d["witnesses_valid"],
            status=d["status"],
            stats=d["stats"],
            elapsed=d["elapsed"],
        )


def verify_graph(
    spec: FamilySpec, g: Graph, budget: int | None = None, oracle: bool = True
) -> VerificationRecord:
    """Run every solver on ``g`` and compare against ``predict(spec)``."""
    t0 = time.perf_counter()
    budget = default_budget() if budget is None else budget
    if g.isolated_vertices():
        logger.warning("%s has isolated vertices %s", spec, g.isolated_vertices())
    values: dict[str, Any] = {}
    stats: dict[str, Any] = {}
    valid = True
    status = "ok"
    try:
        res = mis_exact(g, budget)
        values["alpha"] = res.value
        stats["mis_nodes"] = res.stats["nodes"]
        valid &= is_independent_set(g, res.witness) and len(res.witness) == res.value
    except BudgetExhausted:
        status = "budget_exhausted"
    res = max_matching(g)
    values["nu"] = res.value
    stats["augmentations"] = res.stats["augmentations"]
    valid &= is_matching(g, res.witness) and len(res.witness) == res.value
    try:
        res = alpha_line(g, budget)
        values["alpha_line"] = res.value
        stats["line_mis_nodes"] = res.stats["nodes"]
        valid &= is_matching(g, res.witness) and len(res.witness) == res.value
    except BudgetExhausted:
        status = "budget_exhausted"
    if oracle and g.n <= MAX_BRUTEFORCE_VERTICES:
        values["oracle_alpha"] = mis_bruteforce(g).value
    if oracle and g.m <= MAX_BRUTEFORCE_EDGES:
        values["oracle_nu"] = matching_bruteforce(g).value
    return VerificationRecord(
        spec=spec,
        predicted=predict(spec),
        vertices=g.n,
        edges=g.m,
        witnesses_valid=bool(valid),
        status=status,
        stats=stats,
        elapsed=time.perf_counter() - t0,
        **values,
    )


def _verify_spec(spec: FamilySpec, budget: int, oracle: bool) -> VerificationRecord:
    return verify_graph(spec, generate(spec), budget, oracle)


def verify_family(
    spec_range: str | Iterable[FamilySpec], config: RunConfig | None = None
) -> list[VerificationRecord]:
    """One record per family member, ordered by parameter tuple.

    Budget exhaustion on an instance is recorded in its row; it does not stop
    the sweep.
    """
    config = config or RunConfig()
    specs = parse_family_range(spec_range) if isinstance(spec_range, str) else list(spec_range)
    specs = sorted(specs)
    work = partial(_verify_spec, budget=config.budget, oracle=config.oracle)
    if config.jobs > 1 and len(specs) > 1:
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            return list(pool.map(work, specs))
    return [work(s) for s in specs]


def verify_all(config: RunConfig | None = None) -> list[VerificationRecord]:
    config = config or RunConfig()
    records: list[VerificationRecord] = []
    for text in config.families:
        records += verify_family(text, config)
    return records


def summarize(records: Sequence[VerificationRecord]) -> dict[str, int]:
    return {
        "pass": sum(r.match for r in records),
        "fail": sum(r.failed for r in records),
        "skipped": sum(r.skipped for r in records),
    }


# -- random graphs ---------------------------------------------------------------


def random_graph(rng: np.random.Generator, max_vertices: int, max_edges: int) -> Graph:
    """Uniform vertex count in ``1..max_vertices``, then a uniform edge count and edge set."""
    n = int(rng.integers(1, max_vertices + 1))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    k = int(rng.integers(0, min(max_edges, len(pairs)) + 1))
    chosen = rng.choice(len(pairs), size=k, replace=False) if k else []
    return build_graph(n, [pairs[i] for i in chosen])


@dataclass
class Theorem1Summary:
    total: int
    passed: int
    failed: int
    seed: int
    counterexamples: list[dict[str, Any]] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return self.failed == 0


def check_line_identity(g: Graph, oracle: bool = True, budget: int | None = None) -> dict[str, Any]:
    """Compare alpha(L(g)), blossom nu(g) and (optionally) brute-force nu(g)."""
    line = alpha_line(g, budget)
    nu = max_matching(g)
    row: dict[str, Any] = {
        "n": g.n,
        "edges": [list(e) for e in g.edges],
        "alpha_line": line.value,
        "nu": nu.value,
    }
    ok = line.value == nu.value and is_matching(g, line.witness) and is_matching(g, nu.witness)
    if oracle:
        row["nu_bruteforce"] = matching_bruteforce(g).value
        ok = ok and row["nu_bruteforce"] == nu.value
    row["ok"] = bool(ok)
    return row


def verify_theorem1(
    count: int,
    max_vertices: int = 10,
    max_edges: int = 20,
    seed: int = 0,
    oracle: bool = True,
    budget: int | None = None,
) -> Theorem1Summary:
    """Check alpha(L(G)) == nu(G) on ``count`` random simple graphs.

    Failures are returned as data: each counterexample carries its full edge list.
    """
    if oracle and max_edges > MAX_BRUTEFORCE_EDGES:
        raise ValueError(
            f"max_edges={max_edges} exceeds the brute-force limit {MAX_BRUTEFORCE_EDGES}; "
            "disable the oracle or lower the bound"
        )
    if max_vertices < 1 or max_edges < 0 or count < 0:
        raise ValueError("count, max_vertices and max_edges must be non-negative (max_vertices >= 1)")
    t0 = time.perf_counter()
    rng = np.random.default_rng(seed)
    bad = []
    for _ in range(count):
        row = check_line_identity(random_graph(rng, max_vertices, max_edges), oracle, budget)
        if not row["ok"]:
            bad.append(row)
    return Theorem1Summary(
        total=count,
        passed=count - len(bad),
        failed=len(bad),
        seed=seed,
        counterexamples=bad,
        elapsed=time.perf_counter() - t0,
    )


# -- reports ---------------------------------------------------------------------


def _cell(x: Any) -> str:
    if x is None:
        return ""
    if isinstance(x, bool):
        return "true" if x else "false"
    return str(x)


def _csv_row(r: VerificationRecord) -> list[str]:
    p = r.predicted
    total = prod = None
    if r.alpha is not None and r.alpha_line is not None:
        total, prod = r.alpha + r.alpha_line, r.alpha * r.alpha_line
    values = [
        r.spec.family.value, r.spec.get("n"), r.alpha, r.alpha_line, total, prod, r.match,
        r.spec.get("m"), r.nu, p.alpha, p.alpha_line, p.sum, p.product,
        r.oracle_alpha, r.oracle_nu, r.status, r.vertices, r.edges, p.provenance,
    ]
    return [_cell(v) for v in values]


def _table(records: Sequence[VerificationRecord]) -> str:
    head = ["family", "params", "pred a/aL", "a", "nu", "aL", "sum", "prod", "oracle", "result"]
    rows = []
    for r in records:
        p = r.predicted
        params = ",".join(f"{k}={v}" for k, v in r.spec.params)
        oracle = "/".join(_cell(x) or "-" for x in (r.oracle_alpha, r.oracle_nu))
        total = prod = ""
        if r.alpha is not None and r.alpha_line is not None:
            total, prod = str(r.alpha + r.alpha_line), str(r.alpha * r.alpha_line)
        if r.match:
            result = "PASS"
        elif r.failed:
            result = "FAIL " + ",".join(k for k, v in r.flags.items() if not v)
        else:
            result = r.status.upper()
        rows.append([
            r.spec.family.value, params, f"{p.alpha}/{p.alpha_line}", _cell(r.alpha),
            _cell(r.nu), _cell(r.alpha_line), total, prod, oracle, result,
        ])
    widths = [max(len(x) for x in col) for col in zip(head, *rows)]
    fmt = "  ".join(f"{{:<{w}}}" for w in widths)
    lines = [fmt.format(*head).rstrip(), fmt.format(*("-" * w for w in widths))]
    lines += [fmt.format(*row).rstrip() for row in rows]
    s = summarize(records)
    verdict = "PASSED" if s["fail"] == 0 and s["skipped"] == 0 else "FAILED"
    lines.append(f"\n{verdict}: {s['pass']} pass, {s['fail']} fail, {s['skipped']} skipped")
    return "\n".join(lines) + "\n"


def emit_report(
    records: Sequence[VerificationRecord], format: str = "csv", config: RunConfig | None = None
) -> str:
    """Serialize ``records``. Output is byte-stable for identical records.

    CSV omits timings entirely so that repeated runs compare equal; JSON keeps
    them under each record's ``elapsed`` key.
    """
    if not records:
        raise ReportError("no records to report")
    if format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        writer.writerows(_csv_row(r) for r in records)
        return buf.getvalue()
    if format == "json":
        doc = {
            "run_config": config.to_dict() if config else None,
            "records": [r.to_dict() for r in records],
            "summary": summarize(records),
        }
        return json.dumps(doc, indent=2, sort_keys=True) + "\n"
    if format == "table":
        return _table(records)
    raise ReportError(f"unknown report format {format!r}; expected one of {REPORT_FORMATS}")


def parse_json_report(text: str) -> tuple[RunConfig | None, list[VerificationRecord]]:
    doc = json.loads(text)
    cfg = RunConfig.from_dict(doc["run_config"]) if doc.get("run_config") else None
    return cfg, [VerificationRecord.from_dict(d) for d in doc["records"]]


def write_report(text: str, path: str) -> None:
    try:
        with open(path, "w") as fh:
            fh.write(text)
    except OSError as exc:
        raise OSError(f"cannot write report to {path}: {exc.strerror}") from exc


__all__ = [
    "DEFAULT_GRID",
    "RunConfig",
    "Theorem1Summary",
    "VerificationRecord",
    "check_line_identity",
    "emit_report",
    "parse_json_report",
    "random_graph",
    "summarize",
    "verify_all",
    "verify_family",
    "verify_graph",
    "verify_theorem1",
    "write_report",
]
