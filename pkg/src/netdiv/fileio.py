"""Text formats for instances and solutions.

Graph files::

    n m
    x y          (n vertex coordinate lines)
    u v w        (m edge lines, 0-based ids, float weight)

Lines starting with ``#`` and blank lines are ignored.  For odd-path
queries on non-planar data the coordinate block may be omitted; the
parser tells the two layouts apart by the field count of the first data
line after the header.

Solution files::

    status cost  (status in {optimal, already-bridge, infeasible})
    u v          (one line per removed edge)

Generated instances get a sidecar file ``<name>.meta`` holding one line
``s t bu bv``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path as FsPath
from typing import Optional, Union

import numpy as np

from .diversion import DiversionSolution, OPTIMAL
from .errors import GraphError
from .graph import WeightedGraph
from .plane import PlaneGraph, rotation_from_coordinates

__all__ = [
    "GraphFileError",
    "ParsedGraph",
    "parse_graph_text",
    "read_graph_file",
    "write_graph_file",
    "write_instance",
    "read_instance_meta",
    "format_solution",
    "parse_solution_text",
]


class GraphFileError(GraphError):
    """Malformed instance file; the message carries the line number."""


@dataclass(frozen=True)
class ParsedGraph:
    n: int
    coords: Optional[np.ndarray]
    edges: list

    def weighted_graph(self) -> WeightedGraph:
        if self.edges:
            u, v, w = zip(*self.edges)
        else:
            u = v = w = ()
        return WeightedGraph(self.n, np.array(u, np.int64),
                             np.array(v, np.int64), np.array(w, np.float64))

    def plane_graph(self) -> PlaneGraph:
        if self.coords is None:
            raise GraphFileError(
                "this graph file has no coordinate block, but a plane "
                "embedding is required here")
        return rotation_from_coordinates(self.weighted_graph(), self.coords)


def _data_lines(text: str):
    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield ln, line


def parse_graph_text(text: str, need_coords: bool = True) -> ParsedGraph:
    """Parse the graph format; see the module docstring.

    With ``need_coords`` False, a file whose first data line after the
    header has three fields is read as a bare weighted edge list.
    """
    lines = _data_lines(text)

    def fail(ln, msg):
        raise GraphFileError(f"line {ln}: {msg}")

    try:
        ln, header = next(lines)
    except StopIteration:
        raise GraphFileError("empty graph file") from None
    parts = header.split()
    if len(parts) != 2:
        fail(ln, f"expected header 'n m', got {header!r}")
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError:
        fail(ln, f"non-integer header fields in {header!r}")
    if n < 0 or m < 0:
        fail(ln, "n and m must be non-negative")

    buffered = list(lines)
    has_coords = True
    if buffered:
        first_fields = len(buffered[0][1].split())
        if first_fields == 3 and not need_coords:
            has_coords = False
        elif first_fields == 3 and need_coords and n > 0:
            fail(buffered[0][0],
                 "expected n coordinate lines 'x y' before the edges")
    elif n > 0:
        raise GraphFileError(f"expected {n} coordinate lines, found none")

    pos = 0
    coords = None
    if has_coords:
        if len(buffered) < n:
            raise GraphFileError(
                f"expected {n} coordinate lines, found {len(buffered)}")
        coords = np.empty((n, 2), np.float64)
        for i in range(n):
            ln, line = buffered[pos]
            pos += 1
            parts = line.split()
            if len(parts) != 2:
                fail(ln, f"expected 'x y', got {line!r}")
            try:
                coords[i, 0] = float(parts[0])
                coords[i, 1] = float(parts[1])
            except ValueError:
                fail(ln, f"non-numeric coordinate in {line!r}")
    edges = []
    for i in range(m):
        if pos >= len(buffered):
            raise GraphFileError(
                f"expected {m} edge lines, found {len(edges)}")
        ln, line = buffered[pos]
        pos += 1
        parts = line.split()
        if len(parts) != 3:
            fail(ln, f"expected 'u v w', got {line!r}")
        try:
            u, v, w = int(parts[0]), int(parts[1]), float(parts[2])
        except ValueError:
            fail(ln, f"malformed edge line {line!r}")
        edges.append((u, v, w))
    if pos < len(buffered):
        fail(buffered[pos][0], "trailing content after the edge block")
    return ParsedGraph(n, coords, edges)


def read_graph_file(path, need_coords: bool = True) -> ParsedGraph:
    return parse_graph_text(FsPath(path).read_text(), need_coords)


def format_graph(pg: PlaneGraph) -> str:
    g = pg.graph
    out = [f"{g.n} {g.m}"]
    for x, y in pg.coords:
        out.append(f"{float(x)!r} {float(y)!r}")
    for e in range(g.m):
        out.append(f"{int(g.edge_u[e])} {int(g.edge_v[e])} "
                   f"{float(g.edge_w[e])!r}")
    return "\n".join(out) + "\n"


def write_graph_file(path, pg: PlaneGraph) -> None:
    FsPath(path).write_text(format_graph(pg))


def write_instance(path, pg: PlaneGraph, s: int, t: int, b: int) -> str:
    """Write the graph file plus the ``<path>.meta`` terminal sidecar.

    Returns the sidecar line ``s t bu bv``.
    """
    write_graph_file(path, pg)
    bu, bv = pg.graph.edge_endpoints(b)
    line = f"{s} {t} {bu} {bv}"
    FsPath(str(path) + ".meta").write_text(line + "\n")
    return line


def read_instance_meta(path) -> tuple[int, int, int, int]:
    text = FsPath(path).read_text()
    for _, line in _data_lines(text):
        parts = line.split()
        if len(parts) != 4:
            raise GraphFileError(f"expected 's t bu bv', got {line!r}")
        s, t, bu, bv = (int(p) for p in parts)
        return s, t, bu, bv
    raise GraphFileError(f"no terminal line in {path}")


def format_solution(sol: DiversionSolution, g: WeightedGraph) -> str:
    out = [f"{sol.status} {float(sol.cost)!r}"]
    for e in sol.removal:
        u, v = g.edge_endpoints(e)
        out.append(f"{u} {v}")
    return "\n".join(out) + "\n"


def parse_solution_text(text: str):
    """Parse a solution file into (status, cost, endpoint pairs).

    Ignores comments and the optional ``within-budget:`` line, so solver
    stdout round-trips.
    """
    lines = [(ln, line) for ln, line in _data_lines(text)
             if not line.startswith("within-budget:")]
    if not lines:
        raise GraphFileError("empty solution file")
    ln, head = lines[0]
    parts = head.split()
    if len(parts) != 2 or parts[0] not in (OPTIMAL, "already-bridge",
                                           "infeasible"):
        raise GraphFileError(f"line {ln}: bad solution header {head!r}")
    status = parts[0]
    try:
        cost = float(parts[1])
    except ValueError:
        raise GraphFileError(f"line {ln}: bad cost in {head!r}") from None
    pairs = []
    for ln, line in lines[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise GraphFileError(f"line {ln}: expected 'u v', got {line!r}")
        pairs.append((int(parts[0]), int(parts[1])))
    if not math.isfinite(cost):
        raise GraphFileError("non-finite solution cost")
    return status, cost, pairs
