"""Finite groups as dense Cayley tables.

Elements are the integers ``0..order-1`` and ``mul[x][y]`` is the index of
the product ``x*y``.  Tables are immutable once built; every query here is a
pure function of the table.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np

from .bitset import from_indices, iter_bits, popcount
from .errors import CapacityError, InvalidGroupError, InvalidParameterError

DEFAULT_MAX_ORDER = 20000
DEFAULT_ASSOC_CAP = 256

Permutation = tuple[int, ...]


@dataclass(frozen=True)
class GroupTable:
    order: int
    mul: tuple[tuple[int, ...], ...]
    identity: int
    inverse: tuple[int, ...]
    label: str = "G"
    names: Optional[tuple[str, ...]] = None

    def __post_init__(self):
        if self.order < 1 or len(self.mul) != self.order or len(self.inverse) != self.order:
            raise InvalidGroupError(f"{self.label}: table shape does not match order {self.order}")
        if not 0 <= self.identity < self.order:
            raise InvalidGroupError(f"{self.label}: identity index out of range")
        if self.names is not None and len(self.names) != self.order:
            raise InvalidGroupError(f"{self.label}: {len(self.names)} names for {self.order} elements")

    @classmethod
    def from_table(
        cls,
        mul: Sequence[Sequence[int]],
        label: str = "G",
        names: Optional[Sequence[str]] = None,
        assoc_cap: int = DEFAULT_ASSOC_CAP,
    ) -> "GroupTable":
        """Build a table from raw rows, locating the identity and inverses.

        The result is checked against the group axioms (associativity only
        when ``order <= assoc_cap``).
        """
        rows = tuple(tuple(int(v) for v in row) for row in mul)
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise InvalidGroupError(f"{label}: multiplication table must be square and nonempty")
        ident = next((e for e in range(n) if rows[e] == tuple(range(n))), None)
        if ident is None:
            raise InvalidGroupError(f"{label}: no two-sided identity")
        inverse = []
        for x in range(n):
            try:
                inverse.append(rows[x].index(ident))
            except ValueError:
                raise InvalidGroupError(f"{label}: element {x} has no inverse") from None
        group = cls(n, rows, ident, tuple(inverse), label, tuple(names) if names else None)
        check_group_axioms(group, assoc_cap)
        return group

    def elements(self) -> range:
        return range(self.order)

    def name(self, x: int) -> str:
        return self.names[x] if self.names is not None else str(x)

    def power(self, x: int, k: int) -> int:
        if k < 0:
            x, k = self.inverse[x], -k
        result = self.identity
        for _ in range(k):
            result = self.mul[result][x]
        return result


@dataclass(frozen=True)
class CyclicSubgroup:
    generator: int
    elements: frozenset[int]
    is_maximal: bool = False

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def mask(self) -> int:
        return from_indices(self.elements)


def check_group_axioms(g: GroupTable, assoc_cap: int = DEFAULT_ASSOC_CAP) -> None:
    """Raise :class:`InvalidGroupError` unless ``g`` satisfies the group axioms."""
    n = g.order
    m = np.asarray(g.mul, dtype=np.int64)
    full = np.arange(n)
    if not (np.sort(m, axis=1) == full).all() or not (np.sort(m, axis=0) == full[:, None]).all():
        raise InvalidGroupError(f"{g.label}: table is not a Latin square")
    if not (m[g.identity] == full).all() or not (m[:, g.identity] == full).all():
        raise InvalidGroupError(f"{g.label}: identity {g.identity} is not two-sided")
    inv = np.asarray(g.inverse)
    if not (m[full, inv] == g.identity).all():
        raise InvalidGroupError(f"{g.label}: inverse table is wrong")
    if n <= assoc_cap:
        for a in range(n):
            # (a*b)*c against a*(b*c) for every b, c
            if not (m[m[a]] == m[a][m]).all():
                raise InvalidGroupError(f"{g.label}: associativity fails for a={a}")


def _check_index(g: GroupTable, x: int) -> None:
    if not 0 <= x < g.order:
        raise IndexError(f"element {x} out of range for {g.label} of order {g.order}")


def _check_positive(n: int, what: str) -> None:
    if not isinstance(n, (int, np.integer)) or n < 1:
        raise InvalidParameterError(f"{what} must be a positive integer, got {n!r}")


def _check_capacity(order: int, max_order: int, label: str) -> None:
    if order > max_order:
        raise CapacityError(f"{label} has order {order}, above the cap of {max_order}", max_order)


# ---------------------------------------------------------------------------
# constructors
# ---------------------------------------------------------------------------


def cyclic_group(n: int, max_order: int = DEFAULT_MAX_ORDER) -> GroupTable:
    """Z/nZ under addition; element ``i`` is the residue ``i``."""
    _check_positive(n, "cyclic group order")
    _check_capacity(n, max_order, f"C{n}")
    mul = tuple(tuple((i + j) % n for j in range(n)) for i in range(n))
    inverse = tuple((-i) % n for i in range(n))
    return GroupTable(n, mul, 0, inverse, f"C{n}", tuple(str(i) for i in range(n)))


def direct_product(a: GroupTable, b: GroupTable, max_order: int = DEFAULT_MAX_ORDER) -> GroupTable:
    """Componentwise product; the pair ``(x, y)`` gets index ``x*|b| + y``."""
    label = f"{a.label} x {b.label}"
    n = a.order * b.order
    _check_capacity(n, max_order, label)
    nb = b.order
    mul = tuple(
        tuple(a.mul[x1][x2] * nb + b.mul[y1][y2] for x2 in range(a.order) for y2 in range(nb))
        for x1 in range(a.order)
        for y1 in range(nb)
    )
    inverse = tuple(a.inverse[x] * nb + b.inverse[y] for x in range(a.order) for y in range(nb))
    names = tuple(f"({a.name(x)},{b.name(y)})" for x in range(a.order) for y in range(nb))
    return GroupTable(n, mul, a.identity * nb + b.identity, inverse, label, names)


def dihedral_group(n: int, max_order: int = DEFAULT_MAX_ORDER) -> GroupTable:
    """Dihedral group of order ``2n``.

    Indices ``0..n-1`` are the rotations ``r^i``; ``n + i`` is the reflection
    ``s r^i``.  Uses ``r^a s = s r^-a``.
    """
    _check_positive(n, "dihedral parameter")
    _check_capacity(2 * n, max_order, f"D{n}")

    def product(x: int, y: int) -> int:
        (fx, a), (fy, b) = divmod(x, n), divmod(y, n)
        if not fx:
            return (a + b) % n if not fy else n + (b - a) % n
        return n + (a + b) % n if not fy else (b - a) % n

    mul = tuple(tuple(product(x, y) for y in range(2 * n)) for x in range(2 * n))
    inverse = tuple((-i) % n for i in range(n)) + tuple(range(n, 2 * n))

    def rot(i: int) -> str:
        return "" if i == 0 else ("r" if i == 1 else f"r^{i}")

    names = tuple(rot(i) or "e" for i in range(n)) + tuple("s" + rot(i) for i in range(n))
    return GroupTable(2 * n, mul, 0, inverse, f"D{n}", names)


def cycle_notation(perm: Permutation) -> str:
    """1-based disjoint-cycle string, ``()`` for the identity."""
    seen = [False] * len(perm)
    parts = []
    for start in range(len(perm)):
        if seen[start] or perm[start] == start:
            continue
        cycle = []
        i = start
        while not seen[i]:
            seen[i] = True
            cycle.append(str(i + 1))
            i = perm[i]
        parts.append("(" + " ".join(cycle) + ")")
    return "".join(parts) or "()"


def closure_from_permutations(
    generators: Iterable[Sequence[int]],
    cap: int = DEFAULT_MAX_ORDER,
    label: Optional[str] = None,
) -> GroupTable:
    """Group generated by permutations of ``{0..m-1}`` (image lists).

    Products act left to right: ``(p*q)[i] = q[p[i]]``.  Elements are indexed
    in breadth-first discovery order from the identity, trying generators in
    sorted order, so the same input always produces the same table.
    """
    gens = sorted({tuple(int(v) for v in p) for p in generators})
    degree = len(gens[0]) if gens else 0
    for p in gens:
        if len(p) != degree or sorted(p) != list(range(degree)):
            raise InvalidParameterError(f"not a permutation of {degree} points: {p}")
    if label is None:
        label = "<" + ", ".join(cycle_notation(p) for p in gens) + ">"

    identity = tuple(range(degree))
    elements: list[Permutation] = [identity]
    index = {identity: 0}
    right = [[] for _ in gens]  # right[s][x] = index of x*gens[s]
    parent: list[tuple[int, int]] = [(-1, -1)]
    x = 0
    while x < len(elements):
        perm = elements[x]
        for s, gen in enumerate(gens):
            prod = tuple(gen[i] for i in perm)
            j = index.get(prod)
            if j is None:
                if len(elements) >= cap:
                    raise CapacityError(f"closure of {label} exceeds the cap of {cap} elements", cap)
                j = len(elements)
                index[prod] = j
                elements.append(prod)
                parent.append((x, s))
            right[s].append(j)
        x += 1

    n = len(elements)
    table = np.empty((n, n), dtype=np.int64)
    table[:, 0] = np.arange(n)
    rights = [np.asarray(r, dtype=np.int64) for r in right]
    # column j = (column parent) * generator, since i*(p*s) = (i*p)*s
    for j in range(1, n):
        p, s = parent[j]
        table[:, j] = rights[s][table[:, p]]
    mul = tuple(tuple(row) for row in table.tolist())
    inverse = tuple(int(np.flatnonzero(table[i] == 0)[0]) for i in range(n))
    return GroupTable(n, mul, 0, inverse, label, tuple(cycle_notation(p) for p in elements))


def symmetric_group(n: int, max_order: int = DEFAULT_MAX_ORDER) -> GroupTable:
    _check_positive(n, "symmetric group degree")
    gens = []
    if n >= 2:
        gens = [tuple(list(range(1, n)) + [0]), tuple([1, 0] + list(range(2, n)))]
    return closure_from_permutations(gens, cap=max_order, label=f"S{n}")


def alternating_group(n: int, max_order: int = DEFAULT_MAX_ORDER) -> GroupTable:
    """Generated by the 3-cycles ``(1 2 k)`` for ``k = 3..n``."""
    _check_positive(n, "alternating group degree")
    gens = []
    for k in range(2, n):
        perm = list(range(n))
        perm[0], perm[1], perm[k] = 1, k, 0
        gens.append(tuple(perm))
    return closure_from_permutations(gens, cap=max_order, label=f"A{n}")


# 1, -1, i, -i, j, -j, k, -k
_Q8_TABLE = (
    (0, 1, 2, 3, 4, 5, 6, 7),
    (1, 0, 3, 2, 5, 4, 7, 6),
    (2, 3, 1, 0, 6, 7, 5, 4),
    (3, 2, 0, 1, 7, 6, 4, 5),
    (4, 5, 7, 6, 1, 0, 2, 3),
    (5, 4, 6, 7, 0, 1, 3, 2),
    (6, 7, 4, 5, 3, 2, 1, 0),
    (7, 6, 5, 4, 2, 3, 0, 1),
)
Q8_NAMES = ("1", "-1", "i", "-i", "j", "-j", "k", "-k")


def quaternion_group() -> GroupTable:
    return GroupTable.from_table(_Q8_TABLE, label="Q8", names=Q8_NAMES)


# ---------------------------------------------------------------------------
# element and cyclic-subgroup queries
# ---------------------------------------------------------------------------


def element_order(g: GroupTable, x: int) -> int:
    _check_index(g, x)
    k, y = 1, x
    while y != g.identity:
        y = g.mul[y][x]
        k += 1
    return k


def element_orders(g: GroupTable) -> list[int]:
    return [element_order(g, x) for x in g.elements()]


def _powers(g: GroupTable, x: int) -> list[int]:
    out = [g.identity]
    y = x
    while y != g.identity:
        out.append(y)
        y = g.mul[y][x]
    return out


def generated_cyclic(g: GroupTable, x: int) -> CyclicSubgroup:
    _check_index(g, x)
    return CyclicSubgroup(x, frozenset(_powers(g, x)))


def cyclic_masks(g: GroupTable) -> list[int]:
    """Bitmask of ``<x>`` for every element ``x``."""
    return [from_indices(_powers(g, x)) for x in g.elements()]


def maximal_cyclic_subgroups(g: GroupTable) -> list[CyclicSubgroup]:
    masks = cyclic_masks(g)
    first_generator: dict[int, int] = {}
    for x, m in enumerate(masks):
        first_generator.setdefault(m, x)
    sizes = [popcount(m) for m in masks]
    # <x> is strictly inside <y> exactly when x is a power of y of smaller order
    dominated: set[int] = set()
    for y, m in enumerate(masks):
        for x in iter_bits(m):
            if sizes[x] < sizes[y]:
                dominated.add(masks[x])
    result = [
        CyclicSubgroup(gen, frozenset(iter_bits(m)), True)
        for m, gen in first_generator.items()
        if m not in dominated
    ]
    return sorted(result, key=lambda c: c.generator)


def max_order_element(g: GroupTable) -> int:
    orders = element_orders(g)
    return orders.index(max(orders))


def subgroup_generated(g: GroupTable, xs: Iterable[int]) -> frozenset[int]:
    """Element set of the subgroup generated by ``xs`` (closure under right multiplication)."""
    gens = list(dict.fromkeys(xs))
    seen = {g.identity}
    frontier = [g.identity]
    while frontier:
        nxt = []
        for y in frontier:
            for s in gens:
                z = g.mul[y][s]
                if z not in seen:
                    seen.add(z)
                    nxt.append(z)
        frontier = nxt
    return frozenset(seen)


def is_cyclic(g: GroupTable) -> bool:
    return max(element_orders(g)) == g.order
