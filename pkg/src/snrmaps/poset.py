"""Finite posets with a dense bitset relation, plus involutions on them.

Elements are the integers ``0..size-1``. Each element carries two bitmasks:
``up[x]`` (all y with x <= y) and ``down[x]`` (all y with y <= x). Element
sets cross the public API as frozensets; the ``*_mask`` helpers work on raw
ints for the enumeration code.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .errors import InvolutionViolation, PartialOrderViolation


def to_mask(elements: Iterable[int]) -> int:
    m = 0
    for e in elements:
        m |= 1 << e
    return m


def iter_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def from_mask(mask: int) -> frozenset[int]:
    return frozenset(iter_bits(mask))


@dataclass(frozen=True, eq=False)
class Poset:
    size: int
    up: tuple[int, ...]
    down: tuple[int, ...]

    @property
    def full_mask(self) -> int:
        return (1 << self.size) - 1

    @property
    def elements(self) -> frozenset[int]:
        return frozenset(range(self.size))

    def leq(self, x: int, y: int) -> bool:
        return bool(self.up[x] >> y & 1)

    def lt(self, x: int, y: int) -> bool:
        return x != y and self.leq(x, y)

    # mask-level primitives

    def down_mask(self, mask: int) -> int:
        out = 0
        for z in iter_bits(mask):
            out |= self.down[z]
        return out

    def up_mask(self, mask: int) -> int:
        out = 0
        for z in iter_bits(mask):
            out |= self.up[z]
        return out

    def minimals_mask(self, mask: int) -> int:
        out = 0
        for z in iter_bits(mask):
            if not (self.down[z] & mask) & ~(1 << z):
                out |= 1 << z
        return out

    def maximals_mask(self, mask: int) -> int:
        out = 0
        for z in iter_bits(mask):
            if not (self.up[z] & mask) & ~(1 << z):
                out |= 1 << z
        return out

    def is_antichain_mask(self, mask: int) -> bool:
        return all(not (self.up[z] & mask) & ~(1 << z) for z in iter_bits(mask))

    # set-level API

    def down_closure(self, z: Iterable[int]) -> frozenset[int]:
        """Everything below some member of ``z``."""
        return from_mask(self.down_mask(to_mask(z)))

    def up_closure(self, z: Iterable[int]) -> frozenset[int]:
        return from_mask(self.up_mask(to_mask(z)))

    def minimals(self, z: Iterable[int]) -> frozenset[int]:
        return from_mask(self.minimals_mask(to_mask(z)))

    def maximals(self, z: Iterable[int]) -> frozenset[int]:
        return from_mask(self.maximals_mask(to_mask(z)))

    def is_antichain(self, z: Iterable[int]) -> bool:
        return self.is_antichain_mask(to_mask(z))

    def is_down_set(self, z: Iterable[int]) -> bool:
        m = to_mask(z)
        return self.down_mask(m) == m

    def is_up_set(self, z: Iterable[int]) -> bool:
        m = to_mask(z)
        return self.up_mask(m) == m

    def cover_edges(self) -> list[tuple[int, int]]:
        """Hasse diagram edges (x, y): x < y with nothing strictly between."""
        edges = []
        for x in range(self.size):
            above = self.up[x] & ~(1 << x)
            for y in iter_bits(above):
                between = above & self.down[y] & ~(1 << y)
                if not between:
                    edges.append((x, y))
        return edges

    def linear_extension(self) -> list[int]:
        """Elements sorted so that x < y implies x comes first."""
        return sorted(range(self.size), key=lambda x: (self.down[x].bit_count(), x))


def build_poset(size: int, leq: Callable[[int, int], bool] | Sequence[Sequence[bool]]) -> Poset:
    """Build and validate a poset on ``0..size-1``.

    ``leq`` is either a predicate ``leq(x, y)`` or a square boolean matrix.
    Raises PartialOrderViolation naming the first failing axiom.
    """
    rel = leq if callable(leq) else (lambda x, y: bool(leq[x][y]))
    up = [0] * size
    down = [0] * size
    for x in range(size):
        for y in range(size):
            if rel(x, y):
                up[x] |= 1 << y
                down[y] |= 1 << x
    return poset_from_masks(up, down)


def poset_from_masks(up: Sequence[int], down: Sequence[int] | None = None) -> Poset:
    size = len(up)
    if down is None:
        down_l = [0] * size
        for x in range(size):
            for y in iter_bits(up[x]):
                down_l[y] |= 1 << x
        down = down_l
    for x in range(size):
        if not up[x] >> x & 1:
            raise PartialOrderViolation("reflexivity", (x, x))
    for x in range(size):
        for y in iter_bits(up[x] & ~(1 << x)):
            if up[y] >> x & 1:
                raise PartialOrderViolation("antisymmetry", (x, y))
            missing = up[y] & ~up[x]
            if missing:
                z = next(iter_bits(missing))
                raise PartialOrderViolation("transitivity", (x, y, z))
    return Poset(size, tuple(up), tuple(down))


@dataclass(frozen=True, eq=False)
class Involution:
    """A poset together with an order-reversing involution ``complement``."""

    poset: Poset
    complement: tuple[int, ...]
    strong: bool

    @property
    def size(self) -> int:
        return self.poset.size

    @property
    def involution(self) -> "Involution":
        return self

    def c(self, x: int) -> int:
        return self.complement[x]

    def complement_mask(self, mask: int) -> int:
        out = 0
        for z in iter_bits(mask):
            out |= 1 << self.complement[z]
        return out

    def complement_set(self, z: Iterable[int]) -> frozenset[int]:
        return frozenset(self.complement[x] for x in z)

    def complemented_elements(self) -> frozenset[int]:
        """Elements w with c(w) <= w."""
        p = self.poset
        return frozenset(w for w in range(p.size) if p.leq(self.complement[w], w))


def validate_involution(p: Poset, c: Sequence[int], require_strong: bool = True) -> Involution:
    """Check I1, I2 (and I3 when ``require_strong``) for ``c`` on ``p``."""
    c = tuple(c)
    if len(c) != p.size or sorted(c) != list(range(p.size)):
        raise InvolutionViolation("permutation", tuple(c))
    for x in range(p.size):
        if c[c[x]] != x:
            raise InvolutionViolation("I1", (x, c[x]))
    fixed = [x for x in range(p.size) if c[x] == x]
    strong = not (fixed and p.size >= 2)
    if require_strong and not strong:
        raise InvolutionViolation("I3", (fixed[0],))
    for x in range(p.size):
        for y in iter_bits(p.up[x]):
            if not p.leq(c[y], c[x]):
                raise InvolutionViolation("I2", (x, y))
    return Involution(p, c, strong)


def boolean_lattice(k: int) -> Involution:
    """The subset lattice of a k-set with set complement (elements are bitmasks)."""
    size = 1 << k
    full = size - 1
    up = []
    for x in range(size):
        row = 0
        for y in range(size):
            if x & ~y == 0:
                row |= 1 << y
        up.append(row)
    return validate_involution(poset_from_masks(up), [x ^ full for x in range(size)])


def chain(k: int) -> Poset:
    return build_poset(k, lambda x, y: x <= y)
