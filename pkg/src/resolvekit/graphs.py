"""Immutable simple undirected graphs, BFS all-pairs distances, and text I/O.

Vertex ids are dense 0-based integers. Adjacency lists are kept sorted so
edge-set equality and output determinism are trivially checkable. Graphs and
distance matrices are frozen after construction and safe to share.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import TYPE_CHECKING, Iterable, Iterator

if TYPE_CHECKING:
    from .generators import VertexLabel

EDGE_LIST = "edge-list"
DIMACS = "dimacs"
FORMATS = (EDGE_LIST, DIMACS)

UNREACHED = -1


class FormatError(ValueError):
    """Malformed graph text; carries the 1-based offending line number."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class DisconnectedGraphError(ValueError):
    """Raised by apsp when some pair of vertices has no connecting path."""

    def __init__(self, u: int, v: int):
        super().__init__(f"graph is disconnected: no path between {u} and {v}")
        self.pair = (u, v)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with sorted adjacency lists.

    labels, when present, map each id to a structured family coordinate;
    family is a descriptor such as "ccc:n=2" for generated instances.
    """

    order: int
    adjacency: tuple[tuple[int, ...], ...]
    labels: tuple[VertexLabel, ...] | None = None
    family: str | None = None

    @property
    def edge_count(self) -> int:
        return sum(len(nbrs) for nbrs in self.adjacency) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield edges as (u, v) with u < v, in sorted order."""
        for u, nbrs in enumerate(self.adjacency):
            for v in nbrs:
                if u < v:
                    yield (u, v)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])


def make_graph(
    order: int,
    edges: Iterable[tuple[int, int]],
    labels: tuple[VertexLabel, ...] | None = None,
    family: str | None = None,
) -> Graph:
    """Build a Graph, rejecting self-loops, duplicate edges, and bad ids."""
    if order < 0:
        raise ValueError(f"order must be nonnegative, got {order}")
    if labels is not None and len(labels) != order:
        raise ValueError(f"got {len(labels)} labels for order {order}")
    seen: set[tuple[int, int]] = set()
    adj: list[list[int]] = [[] for _ in range(order)]
    for u, v in edges:
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        if not (0 <= u < order and 0 <= v < order):
            raise ValueError(f"edge ({u}, {v}) out of range for order {order}")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise ValueError(f"duplicate edge ({key[0]}, {key[1]})")
        seen.add(key)
        adj[u].append(v)
        adj[v].append(u)
    return Graph(
        order=order,
        adjacency=tuple(tuple(sorted(nbrs)) for nbrs in adj),
        labels=labels,
        family=family,
    )


@dataclass(frozen=True)
class DistanceMatrix:
    """All-pairs geodesic hop counts of a connected graph."""

    order: int
    rows: tuple[tuple[int, ...], ...]

    def __getitem__(self, u: int) -> tuple[int, ...]:
        return self.rows[u]

    def eccentricity(self, u: int) -> int:
        return max(self.rows[u])

    def diameter(self) -> int:
        return max(max(row) for row in self.rows)


def bfs_distances(g: Graph, src: int) -> list[int]:
    """Hop counts from src to every vertex; UNREACHED (-1) where no path exists."""
    if not (0 <= src < g.order):
        raise ValueError(f"source {src} out of range for order {g.order}")
    dist = [UNREACHED] * g.order
    dist[src] = 0
    queue = deque([src])
    adjacency = g.adjacency
    while queue:
        u = queue.popleft()
        du = dist[u]
        for v in adjacency[u]:
            if dist[v] == UNREACHED:
                dist[v] = du + 1
                queue.append(v)
    return dist


def is_connected(g: Graph) -> bool:
    if g.order == 0:
        return True
    return UNREACHED not in bfs_distances(g, 0)


def apsp(g: Graph) -> DistanceMatrix:
    """BFS from every vertex. Disconnected input is an error, not a sentinel
    matrix: every family graph is connected, and silent infinities would
    corrupt the verifiers downstream."""
    rows = []
    for src in range(g.order):
        row = bfs_distances(g, src)
        if UNREACHED in row:
            raise DisconnectedGraphError(src, row.index(UNREACHED))
        rows.append(tuple(row))
    return DistanceMatrix(order=g.order, rows=tuple(rows))


# ------------------------------------------------------------------ text I/O
#
# edge-list: header "p <order> <edges>", then one "u v" per line, 0-based,
#            u < v, newline-terminated.  Chosen for bit-exact golden files.
# dimacs:    "p edge <order> <edges>" then "e u v" lines, 1-based; "c" lines
#            are comments.


def write_graph(g: Graph, fmt: str = EDGE_LIST) -> str:
    if fmt == EDGE_LIST:
        lines = [f"p {g.order} {g.edge_count}"]
        lines += [f"{u} {v}" for u, v in g.edges()]
    elif fmt == DIMACS:
        lines = [f"p edge {g.order} {g.edge_count}"]
        lines += [f"e {u + 1} {v + 1}" for u, v in g.edges()]
    else:
        raise ValueError(f"unknown graph format {fmt!r}")
    return "\n".join(lines) + "\n"


def _parse_int(token: str, what: str, line: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise FormatError(f"expected integer {what}, got {token!r}", line) from None


def read_graph(text, fmt: str = EDGE_LIST) -> Graph:
    """Parse graph text (a string or a readable stream); raises FormatError
    with a line number on bad input."""
    if fmt not in FORMATS:
        raise ValueError(f"unknown graph format {fmt!r}")
    if hasattr(text, "read"):
        text = text.read()
    order = -1
    declared_edges = -1
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    lineno = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if fmt == DIMACS and line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if order >= 0:
                raise FormatError("duplicate header line", lineno)
            expect = 3 if fmt == EDGE_LIST else 4
            if len(parts) != expect or (fmt == DIMACS and parts[1] != "edge"):
                raise FormatError(f"malformed header {line!r}", lineno)
            order = _parse_int(parts[-2], "order", lineno)
            declared_edges = _parse_int(parts[-1], "edge count", lineno)
            continue
        if order < 0:
            raise FormatError("edge before header line", lineno)
        if fmt == EDGE_LIST:
            if len(parts) != 2:
                raise FormatError(f"malformed edge line {line!r}", lineno)
            u = _parse_int(parts[0], "vertex", lineno)
            v = _parse_int(parts[1], "vertex", lineno)
        else:
            if len(parts) != 3 or parts[0] != "e":
                raise FormatError(f"malformed edge line {line!r}", lineno)
            u = _parse_int(parts[1], "vertex", lineno) - 1
            v = _parse_int(parts[2], "vertex", lineno) - 1
        if u == v:
            raise FormatError(f"self-loop at vertex {u}", lineno)
        if not (0 <= u < order and 0 <= v < order):
            raise FormatError(f"vertex out of range in edge ({u}, {v})", lineno)
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise FormatError(f"duplicate edge ({key[0]}, {key[1]})", lineno)
        seen.add(key)
        edges.append(key)
    if order < 0:
        raise FormatError("missing header line", max(lineno, 1))
    if declared_edges != len(edges):
        raise FormatError(
            f"header declares {declared_edges} edges, found {len(edges)}", lineno
        )
    return make_graph(order, edges)
