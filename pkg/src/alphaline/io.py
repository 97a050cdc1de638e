"""Reading and writing graphs as DIMACS or JSON edge lists.

DIMACS: ``c`` comment lines, one ``p edge N M`` header, then ``e u v`` lines with
1-based vertices. JSON: ``{"n": N, "edges": [[u, v], ...]}`` with 0-based vertices.
"""

from __future__ import annotations

import json
import warnings
from pathlib import Path

from .graph import Graph, GraphError, SelfLoopError, build_graph

FORMATS = ("dimacs", "json")


class GraphFormatError(GraphError):
    pass


class GraphFormatWarning(UserWarning):
    pass


def _infer_format(path: Path) -> str:
    return "json" if path.suffix.lower() == ".json" else "dimacs"


def parse_dimacs(text: str, source: str = "<string>") -> Graph:
    n = declared = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line[0] == "c":
            continue
        parts = line.split()
        where = f"{source}:{lineno}"
        if parts[0] == "p":
            if n is not None:
                raise GraphFormatError(f"{where}: duplicate problem line")
            if len(parts) != 4 or parts[1] not in ("edge", "col"):
                raise GraphFormatError(f"{where}: malformed header {line!r}, expected 'p edge N M'")
            try:
                n, declared = int(parts[2]), int(parts[3])
            except ValueError:
                raise GraphFormatError(f"{where}: non-integer counts in {line!r}") from None
            if n < 1 or declared < 0:
                raise GraphFormatError(f"{where}: invalid counts in {line!r}")
        elif parts[0] == "e":
            if n is None:
                raise GraphFormatError(f"{where}: edge line before 'p edge' header")
            if len(parts) != 3:
                raise GraphFormatError(f"{where}: malformed edge line {line!r}")
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise GraphFormatError(f"{where}: non-integer vertex in {line!r}") from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise GraphFormatError(f"{where}: vertex out of range 1..{n} in {line!r}")
            if u == v:
                raise SelfLoopError(f"{where}: self-loop {line!r}")
            edges.append((u - 1, v - 1))
        else:
            raise GraphFormatError(f"{where}: unrecognized line {line!r}")
    if n is None:
        raise GraphFormatError(f"{source}: missing 'p edge N M' header")
    if declared != len(edges):
        warnings.warn(
            f"{source}: header declares {declared} edges but {len(edges)} 'e' lines were read",
            GraphFormatWarning,
            stacklevel=2,
        )
    return build_graph(n, edges)


def parse_json(text: str, source: str = "<string>") -> Graph:
    try:
        data = json.loads(text)
        n = int(data["n"])
        edges = [(int(u), int(v)) for u, v in data["edges"]]
    except (ValueError, KeyError, TypeError) as exc:
        raise GraphFormatError(f"{source}: not a JSON edge list ({exc})") from None
    return build_graph(n, edges)


def load_graph(path: str | Path, format: str | None = None) -> Graph:
    path = Path(path)
    fmt = format or _infer_format(path)
    text = path.read_text()
    if fmt == "dimacs":
        return parse_dimacs(text, str(path))
    if fmt == "json":
        return parse_json(text, str(path))
    raise ValueError(f"unknown graph format {fmt!r}; expected one of {FORMATS}")


def to_dimacs(g: Graph, comment: str | None = None) -> str:
    lines = [f"c {comment}"] if comment else []
    lines.append(f"p edge {g.n} {g.m}")
    lines += [f"e {u + 1} {v + 1}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def to_json(g: Graph) -> str:
    return json.dumps({"n": g.n, "edges": [list(e) for e in g.edges]}) + "\n"


def dump_graph(g: Graph, format: str = "dimacs", comment: str | None = None) -> str:
    if format == "dimacs":
        return to_dimacs(g, comment)
    if format == "json":
        return to_json(g)
    raise ValueError(f"unknown graph format {format!r}; expected one of {FORMATS}")
