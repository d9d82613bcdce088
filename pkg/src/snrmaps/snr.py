"""The lattice S(n, r) of padded strings.

A string is stored by its symbol set: bit ``i-1`` holds the tilde symbol i
(1 <= i <= r) and bit ``r+j-1`` holds the bar symbol j (1 <= j <= n-r). That
bitmask doubles as the element index inside the lattice poset, so star and
complement are bit operations. The order itself is always evaluated on the
padded string, symbol by symbol, along the chain

    bar(n-r) < ... < bar(1) < 0 < tilde(1) < ... < tilde(r)

where each symbol is encoded by its rank: tilde i -> i, 0 -> 0, bar j -> -j.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator

import numpy as np

from .errors import CapExceeded, ParseError
from .poset import Involution, Poset, iter_bits, poset_from_masks, validate_involution

DEFAULT_MAX_N = 20
DENSE_MAX_N = 12


@dataclass(frozen=True, order=True)
class SnrParams:
    n: int
    r: int

    def __post_init__(self):
        if not (1 <= self.r <= self.n):
            raise ValueError(f"need 1 <= r <= n, got n={self.n}, r={self.r}")

    @property
    def s(self) -> int:
        """Number of bar symbols, n - r."""
        return self.n - self.r

    @property
    def size(self) -> int:
        return 1 << self.n

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1


@dataclass(frozen=True)
class SnrString:
    params: SnrParams
    mask: int

    def __post_init__(self):
        if not 0 <= self.mask < self.params.size:
            raise ValueError(f"mask {self.mask} out of range for {self.params}")

    @classmethod
    def from_parts(cls, params: SnrParams, tilde: Iterable[int] = (), bar: Iterable[int] = ()) -> "SnrString":
        m = 0
        for i in tilde:
            if not 1 <= i <= params.r:
                raise ValueError(f"tilde symbol {i} outside 1..{params.r}")
            m |= 1 << (i - 1)
        for j in bar:
            if not 1 <= j <= params.s:
                raise ValueError(f"bar symbol {j} outside 1..{params.s}")
            m |= 1 << (params.r + j - 1)
        return cls(params, m)

    @property
    def tilde(self) -> frozenset[int]:
        r = self.params.r
        return frozenset(b + 1 for b in iter_bits(self.mask & ((1 << r) - 1)))

    @property
    def bar(self) -> frozenset[int]:
        r = self.params.r
        return frozenset(b - r + 1 for b in iter_bits(self.mask >> r << r))

    @property
    def left(self) -> tuple[int, ...]:
        """Left symbols, strictly decreasing, without padding."""
        return tuple(sorted(self.tilde, reverse=True))

    @property
    def right(self) -> tuple[int, ...]:
        """Right symbols, strictly increasing, without padding."""
        return tuple(sorted(self.bar))

    def padded(self) -> tuple[int, ...]:
        """Ranks of the n padded symbols (tilde i -> i, 0 -> 0, bar j -> -j)."""
        p = self.params
        left = self.left + (0,) * (p.r - len(self.tilde))
        right = (0,) * (p.s - len(self.bar)) + tuple(-j for j in self.right)
        return left + right

    def star(self) -> frozenset[tuple[str, int]]:
        """The symbol set as ('t', i) / ('b', j) pairs."""
        return frozenset([("t", i) for i in self.tilde] + [("b", j) for j in self.bar])

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __str__(self) -> str:
        return format_string(self)

    def __repr__(self) -> str:
        return f"SnrString({format_string(self)!r}, n={self.params.n}, r={self.params.r})"


def unstar(symbols: Iterable[tuple[str, int]], params: SnrParams) -> SnrString:
    tilde, bar = [], []
    for kind, v in symbols:
        if kind == "t":
            tilde.append(v)
        elif kind == "b":
            bar.append(v)
        else:
            raise ValueError(f"unknown symbol kind {kind!r}")
    return SnrString.from_parts(params, tilde, bar)


def leq(a: SnrString, b: SnrString) -> bool:
    """Componentwise comparison of the padded forms."""
    if a.params != b.params:
        raise ValueError("strings from different lattices")
    return all(x <= y for x, y in zip(a.padded(), b.padded()))


def complement(w: SnrString) -> SnrString:
    return SnrString(w.params, w.mask ^ w.params.full_mask)


def empty_string(params: SnrParams) -> SnrString:
    return SnrString(params, 0)


def full_string(params: SnrParams) -> SnrString:
    return SnrString(params, params.full_mask)


def xi(i: int, params: SnrParams) -> SnrString:
    """xi_0 is the empty string; xi_i has the single symbol tilde i."""
    if not 0 <= i <= params.r:
        raise ValueError(f"xi index {i} outside 0..{params.r}")
    return SnrString(params, 0 if i == 0 else 1 << (i - 1))


def eta(j: int, params: SnrParams) -> SnrString:
    if not 1 <= j <= params.s:
        raise ValueError(f"eta index {j} outside 1..{params.s}")
    return SnrString(params, 1 << (params.r + j - 1))


def fixed_strings(params: SnrParams) -> tuple[list[SnrString], list[SnrString]]:
    """(xi_0..xi_r, eta_1..eta_{n-r})."""
    return ([xi(i, params) for i in range(params.r + 1)],
            [eta(j, params) for j in range(1, params.s + 1)])


def chain_rank(params: SnrParams, bit: int) -> int:
    """Rank of the symbol stored at ``bit`` in the chain order."""
    return bit + 1 if bit < params.r else -(bit - params.r + 1)


def partitions(w: SnrString) -> Iterator[tuple[SnrString, ...]]:
    """All set-partitions of star(w), blocks mapped back to strings.

    Restricted growth strings over the symbols of w taken in chain order
    (smallest first). The empty string yields nothing.
    """
    p = w.params
    bits = sorted(iter_bits(w.mask), key=lambda b: chain_rank(p, b))
    k = len(bits)
    if k == 0:
        return
    rgs = [0] * k
    while True:
        nblocks = max(rgs) + 1
        blocks = [0] * nblocks
        for b, g in zip(bits, rgs):
            blocks[g] |= 1 << b
        yield tuple(SnrString(p, m) for m in blocks)
        # next restricted growth string
        i = k - 1
        while i > 0 and rgs[i] > max(rgs[:i]):
            i -= 1
        if i == 0:
            return
        rgs[i] += 1
        for j in range(i + 1, k):
            rgs[j] = 0


# text format

_TOKEN = re.compile(r"\d+")


def format_string(w: SnrString) -> str:
    p = w.params
    left = list(w.left) + [0] * (p.r - len(w.left))
    right = [0] * (p.s - len(w.right)) + list(w.right)
    if p.r <= 9 and p.s <= 9:
        return "".join(map(str, left)) + "|" + "".join(map(str, right))
    return ".".join(map(str, left)) + "|" + ".".join(map(str, right))


def parse_string(text: str, params: SnrParams | None = None) -> SnrString:
    """Parse ``"4310|001"`` (digit form) or ``"10.4.3.1.0|0.0.1"`` (token form).

    Without ``params`` the shape is read off the text: r left slots and
    n - r right slots.
    """
    text = text.strip()
    if text.count("|") != 1:
        raise ParseError("expected exactly one '|'", text.find("|") if "|" in text else len(text))
    bar_at = text.index("|")
    lhs, rhs = text[:bar_at], text[bar_at + 1:]
    dotted = "." in text

    def tokens(part: str, offset: int) -> list[tuple[int, int]]:
        if not part:
            return []
        if dotted:
            out, pos = [], offset
            for tok in part.split("."):
                if not tok.isdigit():
                    raise ParseError(f"bad token {tok!r}", pos)
                out.append((int(tok), pos))
                pos += len(tok) + 1
            return out
        for k, ch in enumerate(part):
            if not ch.isdigit():
                raise ParseError(f"bad symbol {ch!r}", offset + k)
        return [(int(ch), offset + k) for k, ch in enumerate(part)]

    left = tokens(lhs, 0)
    right = tokens(rhs, bar_at + 1)
    if params is None:
        if not left:
            raise ParseError("left part is empty", 0)
        params = SnrParams(len(left) + len(right), len(left))
    if len(left) != params.r:
        raise ParseError(f"left part needs {params.r} slots, got {len(left)}", 0)
    if len(right) != params.s:
        raise ParseError(f"right part needs {params.s} slots, got {len(right)}", bar_at + 1)

    tilde = []
    seen_zero = False
    prev = None
    for v, pos in left:
        if v == 0:
            seen_zero = True
            continue
        if seen_zero:
            raise ParseError("nonzero symbol after padding on the left", pos)
        if v > params.r:
            raise ParseError(f"left symbol {v} exceeds r={params.r}", pos)
        if prev is not None and v >= prev:
            raise ParseError("left part must be strictly decreasing", pos)
        prev = v
        tilde.append(v)
    bar = []
    prev = None
    for v, pos in right:
        if v == 0:
            if bar:
                raise ParseError("padding after a symbol on the right", pos)
            continue
        if v > params.s:
            raise ParseError(f"right symbol {v} exceeds n-r={params.s}", pos)
        if prev is not None and v <= prev:
            raise ParseError("right part must be strictly increasing", pos)
        prev = v
        bar.append(v)
    return SnrString.from_parts(params, tilde, bar)


@dataclass(frozen=True, eq=False)
class SnrLattice:
    """S(n, r). The dense poset is built lazily (n <= DENSE_MAX_N)."""

    params: SnrParams
    dense_max_n: int = field(default=DENSE_MAX_N, repr=False)

    @property
    def size(self) -> int:
        return self.params.size

    def string(self, index: int) -> SnrString:
        return SnrString(self.params, index)

    def index(self, w: SnrString) -> int:
        if w.params != self.params:
            raise ValueError(f"{w!r} is not in S({self.params.n},{self.params.r})")
        return w.mask

    def strings(self) -> Iterator[SnrString]:
        for m in range(self.size):
            yield SnrString(self.params, m)

    def parse(self, text: str) -> SnrString:
        return parse_string(text, self.params)

    def __getitem__(self, text: str) -> int:
        return self.parse(text).mask

    def padded_table(self) -> np.ndarray:
        return np.array([self.string(m).padded() for m in range(self.size)], dtype=np.int16)

    @cached_property
    def involution(self) -> Involution:
        if self.params.n > self.dense_max_n:
            raise CapExceeded(f"dense order for n={self.params.n} exceeds cap {self.dense_max_n}")
        table = self.padded_table()
        up = []
        for x in range(self.size):
            row = np.all(table >= table[x], axis=1)
            up.append(int.from_bytes(np.packbits(row, bitorder="little").tobytes(), "little"))
        poset = poset_from_masks(up)
        full = self.params.full_mask
        return validate_involution(poset, [m ^ full for m in range(self.size)])

    @property
    def poset(self) -> Poset:
        return self.involution.poset

    def minimum(self) -> SnrString:
        return SnrString.from_parts(self.params, (), range(1, self.params.s + 1))

    def maximum(self) -> SnrString:
        return SnrString.from_parts(self.params, range(1, self.params.r + 1), ())

    def names(self, z: Iterable[int]) -> list[str]:
        return sorted(format_string(self.string(i)) for i in z)


def build_lattice(params: SnrParams, max_n: int = DEFAULT_MAX_N) -> SnrLattice:
    if params.n > max_n:
        raise CapExceeded(f"n={params.n} exceeds cap {max_n}")
    return SnrLattice(params)
