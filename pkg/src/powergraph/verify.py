"""Check the diameter bounds on a catalog of groups and report the results."""

from __future__ import annotations

import json
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Optional, Union

from .analysis import connected_components, diameter
from .dsl import build_group
from .errors import CapacityError, InvalidParameterError, PowerGraphError
from .graphs import complement, drop_isolated, enhanced_power_graph, power_graph
from .group import DEFAULT_MAX_ORDER, GroupTable, cyclic_group, cyclic_masks, is_cyclic
from .witnesses import DEFAULT_PATH_CAP, extract_witnesses, validate_witnesses

log = logging.getLogger(__name__)

POWER = "power"
ENHANCED_POWER = "enhanced_power"
DIAMETER_BOUND = 3
SHARPNESS_GROUPS = ("C6xC4", "C10xC4", "C6xC9")


@dataclass
class VerificationReport:
    group_label: str
    group_order: Optional[int]
    graph_kind: str
    isolated_count: Optional[int]
    surviving_vertices: Optional[int]
    component_count: Optional[int]
    diameter: Optional[int]
    bound_satisfied: bool
    witnesses_validated: Optional[bool]
    elapsed_ms: int
    error: Optional[str] = None

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict) -> "VerificationReport":
        return cls(**data)

    @classmethod
    def failed(cls, label: str, graph_kind: str, error: str) -> "VerificationReport":
        return cls(label, None, graph_kind, None, None, None, None, False, None, 0, error)


@dataclass
class CatalogSpec:
    entries: list[str] = field(default_factory=list)
    max_order: int = DEFAULT_MAX_ORDER


def default_catalog(max_order: int = DEFAULT_MAX_ORDER) -> CatalogSpec:
    """Cyclic, abelian rank-2, dihedral, symmetric, alternating and quaternion groups.

    Ends with the three groups ``C_pr x C_p^2`` for (p, r) = (2, 3), (2, 5), (3, 2).
    """
    entries = [f"C{n}" for n in range(1, 101)]
    entries += [f"C{a}xC{b}" for a in range(2, 13) for b in range(a, 13)]
    entries += [f"D{n}" for n in range(1, 31)]
    entries += [f"S{n}" for n in range(1, 7)]
    entries += [f"A{n}" for n in range(1, 7)]
    entries += ["Q8"] + [f"Q8xC{n}" for n in range(1, 6)]
    entries += list(SHARPNESS_GROUPS)
    return CatalogSpec(list(dict.fromkeys(entries)), max_order)


def load_catalog(path: Union[str, Path], max_order: int = DEFAULT_MAX_ORDER) -> CatalogSpec:
    """One group expression per line; ``#`` starts a comment."""
    entries = []
    for line in Path(path).read_text().splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            entries.append(line)
    return CatalogSpec(entries, max_order)


def _bound_holds(surviving: int, components: int, diam: Optional[int]) -> bool:
    return surviving == 0 or (components == 1 and diam is not None and diam <= DIAMETER_BOUND)


def _verify(g: GroupTable, kind: str, graph, path_cap: int) -> VerificationReport:
    start = time.monotonic()
    try:
        reduced = drop_isolated(graph)
        surviving = reduced.graph.vertex_count
        components = connected_components(reduced.graph).component_count
        diam = diameter(reduced.graph)
        witnessed = None
        if kind == ENHANCED_POWER:
            bundle = extract_witnesses(g, graph=graph, path_cap=path_cap)
            witnessed = validate_witnesses(bundle, graph)
    except CapacityError as e:
        raise CapacityError(f"{g.label}: {e}", e.cap) from e
    elapsed = int((time.monotonic() - start) * 1000)
    return VerificationReport(
        group_label=g.label,
        group_order=g.order,
        graph_kind=kind,
        isolated_count=graph.vertex_count - surviving,
        surviving_vertices=surviving,
        component_count=components,
        diameter=diam,
        bound_satisfied=_bound_holds(surviving, components, diam),
        witnesses_validated=witnessed,
        elapsed_ms=elapsed,
    )


def verify_theorem(g: GroupTable, path_cap: int = DEFAULT_PATH_CAP) -> VerificationReport:
    """Complement of the enhanced power graph, minus isolated vertices."""
    return _verify(g, ENHANCED_POWER, complement(enhanced_power_graph(g)), path_cap)


def verify_corollary(g: GroupTable) -> VerificationReport:
    """Complement of the power graph, minus isolated vertices (BFS only)."""
    return _verify(g, POWER, complement(power_graph(g)), 0)


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def is_prime_power(n: int) -> bool:
    """True for ``p**k`` with ``k >= 0``; the trivial group counts as a p-group."""
    if n == 1:
        return True
    p = next(d for d in range(2, n + 1) if n % d == 0)
    while n % p == 0:
        n //= p
    return n == 1


def cyclic_subgroups_form_chain(g: GroupTable) -> bool:
    """Whether the distinct cyclic subgroups are totally ordered by inclusion."""
    masks = sorted(set(cyclic_masks(g)), key=lambda m: bin(m).count("1"))
    return all(small & big == small for small, big in zip(masks, masks[1:]))


def verify_remark(p: int, m: int, max_order: int = DEFAULT_MAX_ORDER) -> bool:
    """Power graph of ``C_{p^m}`` is complete, its complement edgeless, its subgroups a chain."""
    if not is_prime(p):
        raise InvalidParameterError(f"{p} is not prime")
    if m < 1:
        raise InvalidParameterError(f"exponent must be positive, got {m}")
    if p**m > max_order:
        raise CapacityError(f"C{p}^{m} has order {p**m}, above the cap of {max_order}", max_order)
    g = cyclic_group(p**m, max_order)
    graph = power_graph(g)
    return graph.is_complete() and complement(graph).edge_count() == 0 and cyclic_subgroups_form_chain(g)


def verify_remark_converse(catalog: CatalogSpec) -> list[tuple[str, bool]]:
    """For each entry: a complete power graph forces a cyclic group of prime-power order."""
    results = []
    for entry in catalog.entries:
        try:
            g = build_group(entry, catalog.max_order)
        except PowerGraphError as e:
            log.warning("skipping %s: %s", entry, e)
            results.append((entry, False))
            continue
        complete = power_graph(g).is_complete()
        results.append((g.label, not complete or (is_cyclic(g) and is_prime_power(g.order))))
    return results


def _verify_entry(entry: str, max_order: int, path_cap: int) -> list[VerificationReport]:
    try:
        g = build_group(entry, max_order)
        return [verify_theorem(g, path_cap), verify_corollary(g)]
    except PowerGraphError as e:
        log.warning("entry %s failed: %s", entry, e)
        return [VerificationReport.failed(entry, kind, str(e)) for kind in (ENHANCED_POWER, POWER)]


def run_catalog(catalog: CatalogSpec, jobs: int = 1, path_cap: int = DEFAULT_PATH_CAP) -> list[VerificationReport]:
    """Theorem and corollary reports for every entry, in catalog order."""
    n = len(catalog.entries)
    args = (catalog.entries, [catalog.max_order] * n, [path_cap] * n)
    if jobs > 1 and n > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            batches = list(pool.map(_verify_entry, *args))
    else:
        batches = list(map(_verify_entry, *args))
    return [r for batch in batches for r in batch]


def exit_code(reports: list[VerificationReport]) -> int:
    return 0 if all(r.bound_satisfied and r.error is None for r in reports) else 1


def reports_to_json(reports: list[VerificationReport], include_timing: bool = True) -> str:
    rows = [r.to_dict() for r in reports]
    if not include_timing:
        for row in rows:
            row.pop("elapsed_ms")
    return json.dumps(rows, indent=2)


def reports_from_json(text: str) -> list[VerificationReport]:
    return [VerificationReport.from_dict(row) for row in json.loads(text)]
