"""Distance representations, the three set-verification predicates, mutually
maximally distant pairs, and twin classes.

All predicates are pure functions of an immutable DistanceMatrix, cheap enough
to sit inside the innermost solver loop: is_resolving and is_doubly_resolving
are O(order * |set|) via tuple hashing, is_strong_resolving is
O(order^2 * |set|) with early exit, and interval membership is decided by
distance additivity, never by path enumeration.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .graphs import DistanceMatrix, Graph, apsp


def _check_members(order: int, members: Sequence[int], min_size: int = 1) -> None:
    if len(members) < min_size:
        raise ValueError(f"vertex set needs at least {min_size} members, got {len(members)}")
    if len(set(members)) != len(members):
        raise ValueError("vertex set contains duplicates")
    for v in members:
        if not (0 <= v < order):
            raise ValueError(f"vertex {v} out of range for order {order}")


def representation(dist: DistanceMatrix, u: int, members: Sequence[int]) -> tuple[int, ...]:
    """Tuple of distances from u to each member, in member order."""
    _check_members(dist.order, members)
    if not (0 <= u < dist.order):
        raise ValueError(f"vertex {u} out of range for order {dist.order}")
    row = dist.rows[u]
    return tuple(row[z] for z in members)


def is_resolving(dist: DistanceMatrix, members: Sequence[int]) -> bool:
    """True iff all vertices have pairwise distinct representations."""
    _check_members(dist.order, members)
    rows = dist.rows
    reps = zip(*(rows[z] for z in members))
    return len(set(reps)) == dist.order


def doubly_resolves(dist: DistanceMatrix, x: int, y: int, u: int, v: int) -> bool:
    """True iff the pair (x, y) separates u and v by a non-constant shift."""
    if x == y:
        raise ValueError("doubly_resolves needs two distinct probe vertices")
    if u == v:
        raise ValueError("doubly_resolves needs two distinct target vertices")
    rows = dist.rows
    return rows[u][x] - rows[u][y] != rows[v][x] - rows[v][y]


def is_doubly_resolving(dist: DistanceMatrix, members: Sequence[int]) -> bool:
    """True iff no two vertices have representations differing by a constant
    vector.

    Computed by normalizing each representation against its first coordinate:
    r(u) - r(v) is a constant vector exactly when the normalized tuples of u
    and v coincide, so one hashing pass over the vertices checks every pair.
    A single probe vertex can never doubly resolve, so |members| >= 2 is
    required rather than answered False.
    """
    _check_members(dist.order, members)
    if len(members) < 2:
        raise ValueError("a doubly resolving set needs at least 2 members")
    rows = dist.rows
    base = rows[members[0]]
    rest = [rows[z] for z in members[1:]]
    normalized = {
        tuple(x - b for x in shifted)
        for b, shifted in zip(base, zip(*rest))
    }
    return len(normalized) == dist.order


def strongly_resolves(dist: DistanceMatrix, w: int, u: int, v: int) -> bool:
    """True iff u lies on a shortest v-w path or v lies on a shortest u-w path."""
    if u == v:
        raise ValueError("strongly_resolves needs two distinct target vertices")
    rows = dist.rows
    duv = rows[u][v]
    return rows[u][w] == duv + rows[v][w] or rows[v][w] == duv + rows[u][w]


def is_strong_resolving(dist: DistanceMatrix, members: Sequence[int]) -> bool:
    """True iff every vertex pair is strongly resolved by some member."""
    _check_members(dist.order, members)
    rows = dist.rows
    for u in range(dist.order):
        ru = rows[u]
        for v in range(u + 1, dist.order):
            duv = ru[v]
            rv = rows[v]
            if not any(ru[w] == duv + rv[w] or rv[w] == duv + ru[w] for w in members):
                return False
    return True


@dataclass(frozen=True)
class MmdGraph:
    """Graph on the same vertex set whose edges are the mutually maximally
    distant pairs of the base graph; its minimum vertex cover is the strong
    solver's cross-check oracle."""

    order: int
    edges: tuple[tuple[int, int], ...]

    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.order)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(nbrs)) for nbrs in adj)


def mmd_graph(order: int, pairs: Sequence[tuple[int, int]]) -> MmdGraph:
    """Normalize arbitrary vertex pairs into an MmdGraph."""
    normalized = sorted({(min(u, v), max(u, v)) for u, v in pairs})
    for u, v in normalized:
        if u == v or not (0 <= u < order and 0 <= v < order):
            raise ValueError(f"bad pair ({u}, {v}) for order {order}")
    return MmdGraph(order=order, edges=tuple(normalized))


def mmd_pairs(g: Graph, dist: DistanceMatrix | None = None) -> MmdGraph:
    """All pairs {u, v} where each vertex is maximally distant from the other
    (no neighbor of one is farther from the other)."""
    if dist is None:
        dist = apsp(g)
    rows = dist.rows
    adjacency = g.adjacency

    def maximally_distant(u: int, v: int) -> bool:
        rv = rows[v]
        duv = rv[u]
        return all(rv[w] <= duv for w in adjacency[u])

    edges = [
        (u, v)
        for u in range(g.order)
        for v in range(u + 1, g.order)
        if maximally_distant(u, v) and maximally_distant(v, u)
    ]
    return MmdGraph(order=g.order, edges=tuple(edges))


def twin_classes(g: Graph) -> tuple[tuple[int, ...], ...]:
    """Partition of the vertices into twin classes.

    u and v are twins when N(u) \\ {v} = N(v) \\ {u}; equivalently they share
    open neighborhoods (non-adjacent twins) or closed neighborhoods (adjacent
    twins). A class never mixes the two flavors, so grouping by both keys and
    merging yields the partition. Any resolving set must contain all but at
    most one member of each class.
    """
    parent = list(range(g.order))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(a: int, b: int) -> None:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)

    open_groups: dict[frozenset[int], int] = {}
    closed_groups: dict[frozenset[int], int] = {}
    for v in range(g.order):
        nbrs = g.adjacency[v]
        open_key = frozenset(nbrs)
        closed_key = frozenset(nbrs) | {v}
        for groups, key in ((open_groups, open_key), (closed_groups, closed_key)):
            if key in groups:
                union(groups[key], v)
            else:
                groups[key] = v
    classes: dict[int, list[int]] = {}
    for v in range(g.order):
        classes.setdefault(find(v), []).append(v)
    return tuple(tuple(sorted(c)) for c in sorted(classes.values()))


def twin_lower_bound(g: Graph) -> int:
    """Forced resolving-set size from twin classes: sum of (|class| - 1)."""
    return sum(len(c) - 1 for c in twin_classes(g))


def doubly_resolving_pairs(
    dist: DistanceMatrix, members: Sequence[int], u: int, v: int
) -> Iterator[tuple[int, int]]:
    """Member pairs that doubly resolve (u, v); mainly a test/inspection aid."""
    n = len(members)
    for i in range(n):
        for j in range(i + 1, n):
            if doubly_resolves(dist, members[i], members[j], u, v):
                yield (members[i], members[j])
