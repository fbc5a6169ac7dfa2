"""Power graphs, enhanced power graphs and their complements.

A :class:`SimpleGraph` stores one int bitset per vertex.  Graphs built from a
group keep, for every vertex, the index of the group element it stands for
(``labels``), so element identities survive :func:`drop_isolated`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

from .bitset import iter_bits, popcount
from .group import GroupTable, cyclic_masks


@dataclass(frozen=True)
class SimpleGraph:
    rows: tuple[int, ...]
    labels: Optional[tuple[int, ...]] = None

    @classmethod
    def from_edges(
        cls, vertex_count: int, edges: Iterable[tuple[int, int]], labels: Optional[Iterable[int]] = None
    ) -> "SimpleGraph":
        rows = [0] * vertex_count
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(tuple(rows), tuple(labels) if labels is not None else None)

    @property
    def vertex_count(self) -> int:
        return len(self.rows)

    def label(self, v: int) -> int:
        return self.labels[v] if self.labels is not None else v

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.rows[v]))

    def degree(self, v: int) -> int:
        return popcount(self.rows[v])

    def edges(self) -> Iterator[tuple[int, int]]:
        """Unordered edges ``(i, j)`` with ``i < j`` in ascending order."""
        for u, row in enumerate(self.rows):
            for v in iter_bits(row >> (u + 1)):
                yield u, u + 1 + v

    def edge_count(self) -> int:
        return sum(popcount(r) for r in self.rows) // 2

    def is_complete(self) -> bool:
        n = self.vertex_count
        full = (1 << n) - 1
        return all(row | (1 << u) == full for u, row in enumerate(self.rows))

    def validate(self) -> None:
        """Raise ``ValueError`` unless the adjacency is symmetric and loop-free."""
        n = self.vertex_count
        if self.labels is not None and len(self.labels) != n:
            raise ValueError("label count does not match vertex count")
        for u, row in enumerate(self.rows):
            if row >> n:
                raise ValueError(f"row {u} references vertices beyond {n - 1}")
            if row >> u & 1:
                raise ValueError(f"self-loop at {u}")
            for v in iter_bits(row):
                if not self.rows[v] >> u & 1:
                    raise ValueError(f"edge {u}-{v} is not symmetric")


@dataclass(frozen=True)
class InducedSubgraphMap:
    kept: tuple[int, ...]
    graph: SimpleGraph


def _element_graph(rows: list[int]) -> SimpleGraph:
    for u in range(len(rows)):
        rows[u] &= ~(1 << u)
    return SimpleGraph(tuple(rows), tuple(range(len(rows))))


def enhanced_power_graph(g: GroupTable) -> SimpleGraph:
    """``x ~ y`` iff ``x`` and ``y`` lie in a common cyclic subgroup."""
    rows = [0] * g.order
    for mask in set(cyclic_masks(g)):
        for x in iter_bits(mask):
            rows[x] |= mask
    return _element_graph(rows)


def power_graph(g: GroupTable) -> SimpleGraph:
    """``x ~ y`` iff one of them is a power of the other."""
    rows = [0] * g.order
    for x, mask in enumerate(cyclic_masks(g)):
        rows[x] |= mask
        for y in iter_bits(mask):
            rows[y] |= 1 << x
    return _element_graph(rows)


def complement(graph: SimpleGraph) -> SimpleGraph:
    full = (1 << graph.vertex_count) - 1
    rows = tuple(full ^ row ^ (1 << u) for u, row in enumerate(graph.rows))
    return SimpleGraph(rows, graph.labels)


def induced_subgraph(graph: SimpleGraph, vertices: Iterable[int]) -> InducedSubgraphMap:
    kept = tuple(sorted(set(vertices)))
    position = {v: i for i, v in enumerate(kept)}
    keep_mask = sum(1 << v for v in kept)
    rows = tuple(
        sum(1 << position[w] for w in iter_bits(graph.rows[v] & keep_mask)) for v in kept
    )
    labels = tuple(graph.label(v) for v in kept)
    return InducedSubgraphMap(kept, SimpleGraph(rows, labels))


def drop_isolated(graph: SimpleGraph) -> InducedSubgraphMap:
    """Induced subgraph on the vertices of nonzero degree."""
    return induced_subgraph(graph, (v for v, row in enumerate(graph.rows) if row))


def to_dot(graph: SimpleGraph, names: Optional[Iterable[str]] = None, name: str = "G") -> str:
    """Render as an undirected DOT graph; ``names`` labels each vertex."""
    names = list(names) if names is not None else [str(graph.label(v)) for v in range(graph.vertex_count)]
    lines = [f"graph {name} {{"]
    for v, text in enumerate(names):
        escaped = text.replace("\\", "\\\\").replace('"', '\\"')
        lines.append(f'  {v} [label="{escaped}"];')
    lines.extend(f"  {i} -- {j};" for i, j in graph.edges())
    lines.append("}")
    return "\n".join(lines) + "\n"
