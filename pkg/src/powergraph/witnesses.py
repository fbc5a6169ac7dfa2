"""Explicit short paths in the complement of the enhanced power graph.

Fix ``g`` of maximal order.  Every element outside ``<g>`` is adjacent to
``g``.  A non-isolated power ``g^l`` misses some maximal cyclic subgroup
``C = <h_l>``, and then ``g^l ~ h_l ~ g``.  Joining two such legs at ``g``
gives a walk of length at most 4; when both ends are powers of ``g`` either
``h_a ~ h_b`` (length 3) or ``<h_a> = <h_b>``, in which case ``g^a ~ h_b``
(length 2).
"""

from __future__ import annotations

import random
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Optional

from .analysis import bfs_distances, isolated_by_definition
from .bitset import iter_bits
from .errors import InvalidParameterError
from .graphs import SimpleGraph, complement, enhanced_power_graph
from .group import CyclicSubgroup, GroupTable, cyclic_masks, max_order_element, maximal_cyclic_subgroups

DEFAULT_PATH_CAP = 512
DEFAULT_SPOT_CHECKS = 256

Pair = tuple[int, int]


@dataclass(frozen=True)
class WitnessBundle:
    g: int
    avoiders: dict[int, CyclicSubgroup] = field(default_factory=dict)
    paths: dict[Pair, tuple[int, ...]] = field(default_factory=dict)
    complete: bool = True  # False when only a random sample of pairs was stored

    def to_dict(self, group: Optional[GroupTable] = None) -> dict:
        def name(x: int):
            return group.name(x) if group is not None else x

        return {
            "g": self.g,
            "g_name": name(self.g),
            "avoiders": [
                {
                    "power": p,
                    "power_name": name(p),
                    "h": c.generator,
                    "h_name": name(c.generator),
                    "subgroup": sorted(c.elements),
                }
                for p, c in sorted(self.avoiders.items())
            ],
            "paths": [{"pair": list(k), "path": list(v)} for k, v in sorted(self.paths.items())],
            "complete": self.complete,
        }


class _Router:
    def __init__(self, graph: SimpleGraph, g: int, g_mask: int, avoiders: dict[int, CyclicSubgroup]):
        self.graph = graph
        self.g = g
        self.g_mask = g_mask
        self.avoiders = avoiders

    def leg(self, x: int) -> tuple[int, ...]:
        """Walk from ``x`` to ``g``."""
        if x == self.g:
            return (x,)
        if not self.g_mask >> x & 1:
            return (x, self.g)
        return (x, self.avoiders[x].generator, self.g)

    def route(self, u: int, v: int) -> tuple[int, ...]:
        if u == v:
            return (u,)
        if self.graph.has_edge(u, v):
            return (u, v)
        a, b = self.leg(u), self.leg(v)
        if len(a) == 3 and len(b) == 3:
            ha, hb = a[1], b[1]
            if self.graph.has_edge(ha, hb):
                return (u, ha, hb, v)
            # <h_a, h_b> is cyclic and both generate maximal cyclic subgroups
            return (u, hb, v)
        return a + b[::-1][1:]


def _setup(g: GroupTable, graph: Optional[SimpleGraph]):
    if graph is None:
        graph = complement(enhanced_power_graph(g))
    top = max_order_element(g)
    g_mask = cyclic_masks(g)[top]
    live = sorted(set(range(g.order)) - isolated_by_definition(graph))
    maximal = maximal_cyclic_subgroups(g)
    live_set = set(live)
    avoiders = {}
    for p in iter_bits(g_mask):
        if p in live_set:
            # the maximal cyclic subgroups are sorted by generator
            avoiders[p] = next(c for c in maximal if p not in c.elements)
    return graph, top, g_mask, live, avoiders


def extract_witnesses(
    g: GroupTable,
    graph: Optional[SimpleGraph] = None,
    path_cap: int = DEFAULT_PATH_CAP,
    spot_checks: int = DEFAULT_SPOT_CHECKS,
    seed: int = 0,
) -> WitnessBundle:
    """Witness data for the complement of the enhanced power graph of ``g``.

    Paths are stored for every unordered pair of non-isolated elements when
    ``g.order <= path_cap``; above the cap only ``spot_checks`` pairs drawn
    with a seeded RNG are kept.  ``graph`` may pass in a prebuilt complement
    enhanced power graph with element-indexed vertices.
    """
    graph, top, g_mask, live, avoiders = _setup(g, graph)
    if not live:
        return WitnessBundle(top)
    router = _Router(graph, top, g_mask, avoiders)
    if g.order <= path_cap:
        pairs = [(u, v) for i, u in enumerate(live) for v in live[i + 1:]]
        complete = True
    else:
        rng = random.Random(seed)
        pairs = sorted({tuple(sorted(rng.sample(live, 2))) for _ in range(spot_checks)})
        complete = False
    paths = {(u, v): router.route(u, v) for u, v in pairs}
    return WitnessBundle(top, avoiders, paths, complete)


def witness_path(g: GroupTable, u: int, v: int, graph: Optional[SimpleGraph] = None) -> tuple[int, ...]:
    """Proof-recipe path between two non-isolated elements."""
    graph, top, g_mask, live, avoiders = _setup(g, graph)
    for x in (u, v):
        if not 0 <= x < g.order:
            raise IndexError(f"element {x} out of range for {g.label}")
        if x not in live:
            raise InvalidParameterError(f"element {x} is isolated in the complement enhanced power graph")
    return _Router(graph, top, g_mask, avoiders).route(u, v)


def validate_witnesses(bundle: WitnessBundle, graph: SimpleGraph, check_distances: bool = True) -> bool:
    """Re-check a bundle against the complement enhanced power graph.

    Every avoider must be a maximal cyclic subgroup missing its power, every
    path must walk along edges of ``graph`` with at most 3 edges, and (with
    ``check_distances``) the BFS distance of each pair must not exceed the
    recorded path length.
    """
    for p, c in bundle.avoiders.items():
        if p in c.elements or not c.is_maximal or c.generator not in c.elements:
            return False
    by_source = defaultdict(list)
    for (u, v), path in bundle.paths.items():
        if path[0] != u or path[-1] != v or len(path) - 1 > 3 or len(set(path)) != len(path):
            return False
        if not all(graph.has_edge(a, b) for a, b in zip(path, path[1:])):
            return False
        by_source[u].append((v, len(path) - 1))
    if check_distances:
        for u, targets in by_source.items():
            dist = bfs_distances(graph, u)
            if any(dist[v] < 0 or dist[v] > length for v, length in targets):
                return False
    return True
