"""Connectivity, diameter, isolated vertices and clique enumeration."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .bitset import from_indices, iter_bits
from .errors import CapacityError
from .graphs import SimpleGraph
from .group import GroupTable, maximal_cyclic_subgroups

DEFAULT_CLIQUE_CAP = 48


@dataclass(frozen=True)
class ComponentPartition:
    component_id: tuple[int, ...]
    component_count: int

    def members(self, c: int) -> list[int]:
        return [v for v, k in enumerate(self.component_id) if k == c]

    def sizes(self) -> list[int]:
        counts = [0] * self.component_count
        for k in self.component_id:
            counts[k] += 1
        return counts


def _reach(graph: SimpleGraph, source: int) -> int:
    seen = frontier = 1 << source
    rows = graph.rows
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= rows[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen


def connected_components(graph: SimpleGraph) -> ComponentPartition:
    """Components numbered in order of their smallest vertex."""
    ids = [-1] * graph.vertex_count
    count = 0
    for v in range(graph.vertex_count):
        if ids[v] < 0:
            for w in iter_bits(_reach(graph, v)):
                ids[w] = count
            count += 1
    return ComponentPartition(tuple(ids), count)


def bfs_distances(graph: SimpleGraph, source: int) -> list[int]:
    """Hop distance from ``source`` to every vertex; -1 when unreachable."""
    dist = [-1] * graph.vertex_count
    dist[source] = 0
    seen = frontier = 1 << source
    rows = graph.rows
    level = 0
    while frontier:
        level += 1
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= rows[v]
        frontier = nxt & ~seen
        seen |= frontier
        for w in iter_bits(frontier):
            dist[w] = level
    return dist


def eccentricity(graph: SimpleGraph, source: int) -> Optional[int]:
    """Largest distance from ``source``, or None if some vertex is unreachable."""
    full = (1 << graph.vertex_count) - 1
    seen = frontier = 1 << source
    rows = graph.rows
    level = 0
    while True:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= rows[v]
        frontier = nxt & ~seen
        if not frontier:
            return level if seen == full else None
        seen |= frontier
        level += 1


def diameter(graph: SimpleGraph) -> Optional[int]:
    """Exact diameter by BFS from every vertex.

    None for the empty graph and for disconnected graphs; 0 for one vertex.
    """
    if graph.vertex_count == 0:
        return None
    best = 0
    for v in range(graph.vertex_count):
        ecc = eccentricity(graph, v)
        if ecc is None:
            return None
        best = max(best, ecc)
    return best


def isolated_by_definition(graph: SimpleGraph) -> set[int]:
    """Vertices of degree zero."""
    return {v for v, row in enumerate(graph.rows) if not row}


def isolated_by_characterization(g: GroupTable) -> set[int]:
    """Elements lying in every maximal cyclic subgroup.

    These are exactly the isolated vertices of the complement of the
    enhanced power graph.
    """
    common = (1 << g.order) - 1
    for c in maximal_cyclic_subgroups(g):
        common &= c.mask
    return set(iter_bits(common))


def maximal_cliques(graph: SimpleGraph, cap: int = DEFAULT_CLIQUE_CAP) -> list[tuple[int, ...]]:
    """All inclusion-maximal cliques, each as a sorted tuple, in sorted order.

    Bron-Kerbosch with Tomita pivoting over the bitset rows.
    """
    n = graph.vertex_count
    if n > cap:
        raise CapacityError(f"clique enumeration is capped at {cap} vertices, graph has {n}", cap)
    if n == 0:
        return []
    rows = graph.rows
    found: list[tuple[int, ...]] = []

    def expand(r: int, p: int, x: int) -> None:
        if not p and not x:
            found.append(tuple(iter_bits(r)))
            return
        pivot = max(iter_bits(p | x), key=lambda u: bin(p & rows[u]).count("1"))
        for v in iter_bits(p & ~rows[pivot]):
            bit = 1 << v
            expand(r | bit, p & rows[v], x & rows[v])
            p &= ~bit
            x |= bit

    expand(0, (1 << n) - 1, 0)
    return sorted(found)


def is_clique(graph: SimpleGraph, vertices) -> bool:
    mask = from_indices(vertices)
    return all((graph.rows[v] | (1 << v)) & mask == mask for v in iter_bits(mask))
