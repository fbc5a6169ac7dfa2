"""Parser for the small group-expression language.

Grammar (ASCII, whitespace between tokens ignored)::

    expr   := atom ("x" atom)*
    atom   := "C" int | "D" int | "S" int | "A" int | "Q8" | "perm:" cycles
    cycles := cycle-list (";" cycle-list)*     one generator per cycle-list
    cycle-list := ("(" int (","? int)* ")")+   1-based points

``D n`` is the dihedral group of order ``2n``.  Examples: ``C6 x C4``,
``Q8xC3``, ``perm:(1 2 3 4 5);(1 2)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Union

from .errors import GroupSpecError
from .group import (
    DEFAULT_MAX_ORDER,
    GroupTable,
    alternating_group,
    closure_from_permutations,
    cyclic_group,
    dihedral_group,
    direct_product,
    quaternion_group,
    symmetric_group,
)


@dataclass(frozen=True)
class Atom:
    kind: str  # one of C, D, S, A, Q8, perm
    param: Union[int, tuple[tuple[tuple[int, ...], ...], ...], None] = None

    @property
    def label(self) -> str:
        if self.kind == "Q8":
            return "Q8"
        if self.kind == "perm":
            return "perm:" + ";".join(
                "".join("(" + " ".join(map(str, c)) + ")" for c in gen) or "()" for gen in self.param
            )
        return f"{self.kind}{self.param}"


@dataclass(frozen=True)
class Product:
    factors: tuple[Atom, ...]

    @property
    def label(self) -> str:
        return " x ".join(f.label for f in self.factors)


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str) -> GroupSpecError:
        return GroupSpecError(message, len(self.text[: self.pos].encode()), self.text)

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, token: str) -> None:
        self.skip_ws()
        if not self.text.startswith(token, self.pos):
            raise self.error(f"expected {token!r}")
        self.pos += len(token)

    def integer(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise self.error("expected an integer")
        return int(self.text[start:self.pos])

    def expr(self) -> Product:
        factors = [self.atom()]
        while self.peek() == "x":
            self.pos += 1
            factors.append(self.atom())
        if self.peek():
            raise self.error(f"unexpected character {self.peek()!r}")
        return Product(tuple(factors))

    def atom(self) -> Atom:
        c = self.peek()
        if self.text.startswith("perm:", self.pos):
            self.pos += len("perm:")
            return Atom("perm", self.cycles())
        if self.text.startswith("Q8", self.pos):
            self.pos += 2
            return Atom("Q8")
        if c in ("C", "D", "S", "A"):
            self.pos += 1
            n = self.integer()
            if n < 1:
                self.pos -= 1
                raise self.error(f"{c} needs a positive integer")
            return Atom(c, n)
        raise self.error("expected a group atom (C, D, S, A, Q8 or perm:)")

    def cycles(self) -> tuple[tuple[tuple[int, ...], ...], ...]:
        gens = [self.cycle_list()]
        while self.peek() == ";":
            self.pos += 1
            gens.append(self.cycle_list())
        return tuple(gens)

    def cycle_list(self) -> tuple[tuple[int, ...], ...]:
        if self.peek() != "(":
            raise self.error("expected '('")
        cycles = []
        while self.peek() == "(":
            self.pos += 1
            points = []
            while self.peek() != ")":
                if not self.peek():
                    raise self.error("unterminated cycle")
                if points and self.peek() == ",":
                    self.pos += 1
                start = self.pos
                p = self.integer()
                if p < 1 or p in points:
                    self.pos = start
                    raise self.error(f"bad point {p} in cycle")
                points.append(p)
            self.pos += 1
            if points:
                cycles.append(tuple(points))
        return tuple(cycles)


def parse(text: str) -> Product:
    """Parse a group expression into its construction tree."""
    return _Parser(text).expr()


def _cycles_to_perm(cycles: tuple[tuple[int, ...], ...], degree: int) -> tuple[int, ...]:
    perm = list(range(degree))
    # disjointness is not required: cycles compose left to right
    for cycle in cycles:
        step = list(range(degree))
        for a, b in zip(cycle, cycle[1:] + cycle[:1]):
            step[a - 1] = b - 1
        perm = [step[v] for v in perm]
    return tuple(perm)


def build_atom(atom: Atom, max_order: int = DEFAULT_MAX_ORDER) -> GroupTable:
    if atom.kind == "C":
        return cyclic_group(atom.param, max_order)
    if atom.kind == "D":
        return dihedral_group(atom.param, max_order)
    if atom.kind == "S":
        return symmetric_group(atom.param, max_order)
    if atom.kind == "A":
        return alternating_group(atom.param, max_order)
    if atom.kind == "Q8":
        return quaternion_group()
    degree = max((p for gen in atom.param for c in gen for p in c), default=0)
    perms = [_cycles_to_perm(gen, degree) for gen in atom.param]
    return closure_from_permutations(perms, cap=max_order, label=atom.label)


def build_group(spec: Union[str, Product], max_order: int = DEFAULT_MAX_ORDER) -> GroupTable:
    """Parse (if needed) and construct the group a spec describes."""
    tree = parse(spec) if isinstance(spec, str) else spec
    tables = [build_atom(a, max_order) for a in tree.factors]
    return reduce(lambda a, b: direct_product(a, b, max_order), tables)
