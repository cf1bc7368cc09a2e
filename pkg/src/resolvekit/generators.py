"""Deterministic constructors for the layered cube/cycle graph families.

Both families grow the same way: layer 1 is a single base unit (an 8-vertex
cube, or an n-cycle); every later layer consists of copies of the unit, and
each unit hangs off the previous layer through its position-1 "head" vertex.
Within a unit in layer p < max, every non-head vertex is the parent of exactly
one unit in layer p+1, and every layer-1 vertex parents one layer-2 unit.

The "ccc" family has 8-vertex cube units (fanout 7, one child per non-head
cube position); the "lcg" family has n-cycle units (fanout n-1). The child-assignment bijection is fixed: position i of
unit (r, s) in layer p spawns unit (r, (s-1)*fanout + (i-1)) in layer p+1.
Any other assignment bijection yields an isomorphic graph, since the spawned
subtrees are identical.

Ids are assigned layer-major, then branch, then unit, then position, so
golden files and lexicographic tie-breaking downstream are stable.
"""
from __future__ import annotations

from dataclasses import dataclass, replace
from functools import lru_cache

from .graphs import Graph, make_graph

CUBE_SIZE = 8


@dataclass(frozen=True, order=True)
class VertexLabel:
    """Structured coordinate (layer p, branch r, unit s, position i).

    Layer-1 vertices carry sentinel branch/unit 0 and their raw 1-based name
    as the position. Position 1 of any unit in layers >= 2 is the head vertex.
    """

    layer: int
    branch: int
    unit: int
    position: int

    def __str__(self) -> str:
        return f"{self.layer}:{self.branch}:{self.unit}:{self.position}"

    @classmethod
    def parse(cls, text: str) -> VertexLabel:
        parts = text.split(":")
        if len(parts) != 4:
            raise ValueError(f"label must be layer:branch:unit:position, got {text!r}")
        try:
            layer, branch, unit, position = (int(p) for p in parts)
        except ValueError:
            raise ValueError(f"non-integer field in label {text!r}") from None
        return cls(layer, branch, unit, position)


def _cube_unit_edges(base: int) -> list[tuple[int, int]]:
    """Edges of one cube unit whose positions 1..8 sit at ids base..base+7.

    Positions split into rings {1..4} and {5..8}; within a ring, positions at
    circular distance 1 are adjacent (index difference 1 or 3), and position i
    of the lower ring connects to position i+4 of the upper ring.
    """
    edges = []
    for lo in (1, 5):
        ring = list(range(lo, lo + 4))
        for a in range(4):
            i, j = ring[a], ring[(a + 1) % 4]
            edges.append((base + min(i, j) - 1, base + max(i, j) - 1))
    for i in range(1, 5):
        edges.append((base + i - 1, base + i + 3))
    return edges


def _cycle_unit_edges(n: int, base: int) -> list[tuple[int, int]]:
    """Edges of one n-cycle unit at ids base..base+n-1 (positions 1..n)."""
    edges = [(base + i, base + (i + 1) % n) for i in range(n)]
    return [(min(u, v), max(u, v)) for u, v in edges]


def build_cube_unit() -> Graph:
    """The 8-vertex, 12-edge base unit (isomorphic to a 4-cycle prism)."""
    labels = tuple(VertexLabel(1, 0, 0, pos) for pos in range(1, 9))
    return make_graph(8, _cube_unit_edges(0), labels=labels, family="cube-unit")


def build_cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"cycle needs n >= 3, got {n}")
    labels = tuple(VertexLabel(1, 0, 0, pos) for pos in range(1, n + 1))
    return make_graph(n, _cycle_unit_edges(n, 0), labels=labels, family=f"cycle:n={n}")


def ccc_order(n: int) -> int:
    """Closed-form vertex count of the n-layer cube-family graph."""
    if n < 1:
        raise ValueError(f"ccc needs n >= 1, got {n}")
    return 8 + 64 * sum(7 ** (k - 2) for k in range(2, n + 1))


def lcg_order(n: int, k: int) -> int:
    """Closed-form vertex count of the k-layer cycle-family graph."""
    if n < 3 or k < 2:
        raise ValueError(f"lcg needs n >= 3 and k >= 2, got n={n}, k={k}")
    return n + sum(n * n * (n - 1) ** (p - 2) for p in range(2, k + 1))


def _build_layered(
    layers: int,
    unit_size: int,
    unit_edges,
    family: str,
) -> Graph:
    """Shared layered construction. fanout = unit_size - 1 children per unit."""
    fanout = unit_size - 1
    labels: list[VertexLabel] = [
        VertexLabel(1, 0, 0, pos) for pos in range(1, unit_size + 1)
    ]
    offsets: dict[tuple[int, int, int], int] = {}  # (layer, branch, unit) -> base id
    for layer in range(2, layers + 1):
        for branch in range(1, unit_size + 1):
            for unit in range(1, fanout ** (layer - 2) + 1):
                offsets[(layer, branch, unit)] = len(labels)
                labels += [
                    VertexLabel(layer, branch, unit, pos)
                    for pos in range(1, unit_size + 1)
                ]
    edges = unit_edges(0)
    for (layer, branch, unit), base in offsets.items():
        edges += unit_edges(base)
    if layers >= 2:
        # layer-1 vertex r parents the head of unit (r, 1) in layer 2
        for branch in range(1, unit_size + 1):
            edges.append((branch - 1, offsets[(2, branch, 1)]))
    for (layer, branch, unit), base in offsets.items():
        if layer == layers:
            continue
        for pos in range(2, unit_size + 1):
            child = (unit - 1) * fanout + (pos - 1)
            edges.append((base + pos - 1, offsets[(layer + 1, branch, child)]))
    return make_graph(len(labels), edges, labels=tuple(labels), family=family)


def build_ccc(n: int) -> Graph:
    """n-layer cube-family graph; n = 1 is the bare cube unit."""
    if n < 1:
        raise ValueError(f"ccc needs n >= 1, got {n}")
    g = _build_layered(n, CUBE_SIZE, _cube_unit_edges, f"ccc:n={n}")
    assert g.order == ccc_order(n)
    return g


def build_lcg(n: int, k: int) -> Graph:
    """k-layer cycle graph with n-cycle units."""
    if n < 3:
        raise ValueError(f"lcg needs n >= 3, got n={n}")
    if k < 2:
        raise ValueError(f"lcg needs k >= 2, got k={k}")
    g = _build_layered(
        k, n, lambda base: _cycle_unit_edges(n, base), f"lcg:n={n},k={k}"
    )
    assert g.order == lcg_order(n, k)
    return g


@lru_cache(maxsize=32)
def _label_index(labels: tuple[VertexLabel, ...]) -> dict[VertexLabel, int]:
    return {label: vid for vid, label in enumerate(labels)}


def _require_labels(g: Graph) -> tuple[VertexLabel, ...]:
    if g.labels is None:
        raise ValueError("graph carries no vertex labels")
    return g.labels


def id_of(g: Graph, label: VertexLabel) -> int:
    """Vertex id of a structured coordinate; inverse of label_of."""
    vid = _label_index(_require_labels(g)).get(label)
    if vid is None:
        raise ValueError(f"no vertex labelled {label}")
    return vid


def label_of(g: Graph, vid: int) -> VertexLabel:
    labels = _require_labels(g)
    if not (0 <= vid < g.order):
        raise ValueError(f"vertex {vid} out of range for order {g.order}")
    return labels[vid]


def max_layer(g: Graph) -> int:
    return max(label.layer for label in _require_labels(g))


def last_layer_units(g: Graph) -> tuple[tuple[int, ...], ...]:
    """Ids of each unit in the last layer, grouped and sorted.

    For a single-layer graph (bare unit) the whole vertex set is one group.
    """
    labels = _require_labels(g)
    top = max(label.layer for label in labels)
    groups: dict[tuple[int, int], list[int]] = {}
    for vid, label in enumerate(labels):
        if label.layer == top:
            groups.setdefault((label.branch, label.unit), []).append(vid)
    return tuple(tuple(sorted(groups[key])) for key in sorted(groups))


def unit_member(g: Graph, layer: int, branch: int, unit: int, position: int) -> int:
    """Convenience wrapper over id_of for unit coordinates."""
    return id_of(g, VertexLabel(layer, branch, unit, position))


# ------------------------------------------------------------- label sidecar
# TSV schema: id <TAB> layer <TAB> branch <TAB> unit <TAB> position


def write_labels_tsv(g: Graph) -> str:
    labels = _require_labels(g)
    lines = [
        f"{vid}\t{lab.layer}\t{lab.branch}\t{lab.unit}\t{lab.position}"
        for vid, lab in enumerate(labels)
    ]
    return "\n".join(lines) + "\n"


def read_labels_tsv(text: str) -> tuple[VertexLabel, ...]:
    rows: dict[int, VertexLabel] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        parts = line.split("\t")
        if len(parts) != 5:
            raise ValueError(f"label line {lineno}: expected 5 tab-separated fields")
        vid, layer, branch, unit, position = (int(p) for p in parts)
        if vid in rows:
            raise ValueError(f"label line {lineno}: duplicate id {vid}")
        rows[vid] = VertexLabel(layer, branch, unit, position)
    if sorted(rows) != list(range(len(rows))):
        raise ValueError("label ids are not dense 0..order-1")
    return tuple(rows[vid] for vid in range(len(rows)))


def with_labels(g: Graph, labels: tuple[VertexLabel, ...]) -> Graph:
    if len(labels) != g.order:
        raise ValueError(f"got {len(labels)} labels for order {g.order}")
    return replace(g, labels=labels)
