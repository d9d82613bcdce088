"""(n, r)-functions, the sums they induce on S(n, r), and the induced sign map."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import ParseError
from .maps import PartialMap
from .snr import SnrLattice, SnrParams, SnrString, build_lattice, full_string

Number = "int | str | Fraction"


def to_fraction(v) -> Fraction:
    """Exact rational from an int, Fraction or text like '0.9', '-2.1', '1/2'."""
    if isinstance(v, Fraction):
        return v
    if isinstance(v, float):
        raise TypeError("floats are not accepted; pass text or Fraction")
    if isinstance(v, str):
        v = v.strip().replace("−", "-")
    return Fraction(v)


class WeightClass(enum.Enum):
    POSITIVE = "positive"
    NEGATIVE = "negative"


@dataclass(frozen=True)
class WeightFunction:
    """f on the symbols of I(n, r), stored low-index first.

    ``tilde[i-1]`` is f(tilde i) and ``bar[j-1]`` is f(bar j). The chain
    f(tilde r) >= ... >= f(tilde 1) >= 0 > f(bar 1) >= ... >= f(bar n-r)
    is enforced at construction.
    """

    params: SnrParams
    tilde: tuple[Fraction, ...]
    bar: tuple[Fraction, ...]

    def __post_init__(self):
        p = self.params
        if len(self.tilde) != p.r or len(self.bar) != p.s:
            raise ValueError(f"need {p.r} tilde and {p.s} bar values")
        t, b = self.tilde, self.bar
        if t and t[0] < 0:
            raise ValueError("f(tilde 1) must be >= 0")
        if any(t[k] > t[k + 1] for k in range(len(t) - 1)):
            raise ValueError("tilde values must be non-decreasing in the index")
        if b and b[0] >= 0:
            raise ValueError("f(bar 1) must be < 0")
        if any(b[k] < b[k + 1] for k in range(len(b) - 1)):
            raise ValueError("bar values must be non-increasing in the index")

    @classmethod
    def from_high_low(cls, params: SnrParams, tilde_high_low: Iterable, bar_high_low: Iterable) -> "WeightFunction":
        """Values in written order: f(tilde r)..f(tilde 1), then f(bar 1)..f(bar n-r)."""
        t = tuple(to_fraction(v) for v in tilde_high_low)[::-1]
        b = tuple(to_fraction(v) for v in bar_high_low)
        return cls(params, t, b)

    def value(self, bit: int) -> Fraction:
        r = self.params.r
        return self.tilde[bit] if bit < r else self.bar[bit - r]

    def total(self) -> Fraction:
        return sum(self.tilde, Fraction(0)) + sum(self.bar, Fraction(0))

    def scaled(self, factor) -> "WeightFunction":
        k = to_fraction(factor)
        if k <= 0:
            raise ValueError("scale factor must be positive")
        return WeightFunction(self.params, tuple(k * v for v in self.tilde), tuple(k * v for v in self.bar))

    def assignment(self) -> dict[str, Fraction]:
        """Variable name -> value, e.g. {'x3': 1/2, ..., 'y1': -1/5}."""
        out = {f"x{i}": self.tilde[i - 1] for i in range(self.params.r, 0, -1)}
        out.update({f"y{j}": self.bar[j - 1] for j in range(1, self.params.s + 1)})
        return out


def weight_class(f: WeightFunction) -> WeightClass:
    return WeightClass.POSITIVE if f.total() >= 0 else WeightClass.NEGATIVE


def sigma(f: WeightFunction, w: SnrString) -> Fraction:
    """Sum of f over the symbols of w (0 for the empty string)."""
    if w.params != f.params:
        raise ValueError("string and weight function belong to different (n, r)")
    total = Fraction(0)
    m, bit = w.mask, 0
    while m:
        if m & 1:
            total += f.value(bit)
        m >>= 1
        bit += 1
    return total


def _sums(f: WeightFunction) -> list[Fraction]:
    # subset sums by lowest-bit recursion, indexed by mask
    size = f.params.size
    sums = [Fraction(0)] * size
    for m in range(1, size):
        low = m & -m
        sums[m] = sums[m ^ low] + f.value(low.bit_length() - 1)
    return sums


def induced_map(f: WeightFunction, lattice: SnrLattice | None = None) -> PartialMap:
    """Total map: P where the sum is >= 0, N where it is < 0."""
    if lattice is None:
        lattice = build_lattice(f.params)
    pos = 0
    for m, s in enumerate(_sums(f)):
        if s >= 0:
            pos |= 1 << m
    return PartialMap.total(lattice, pos)


def pos_set(f: WeightFunction) -> frozenset[int]:
    return frozenset(m for m, s in enumerate(_sums(f)) if s >= 0)


def neg_set(f: WeightFunction) -> frozenset[int]:
    return frozenset(m for m, s in enumerate(_sums(f)) if s < 0)


def alpha_plus(f: WeightFunction) -> int:
    return len(pos_set(f))


def alpha_minus(f: WeightFunction) -> int:
    return len(neg_set(f))


def is_solution(f: WeightFunction, system) -> bool:
    """Does f satisfy every row of the system? (The chain holds by construction.)"""
    from .systems import Relation
    if system.params != f.params:
        return False
    for w, rel in system.rows.items():
        s = sigma(f, w)
        if rel is Relation.GEQ0 and not s >= 0:
            return False
        if rel is Relation.LT0 and not s < 0:
            return False
    return True


# text format: "snr n r", "tilde <r values high->low>", "bar <n-r values high->low>"


def format_weights(f: WeightFunction) -> str:
    p = f.params
    tilde = " ".join(str(v) for v in reversed(f.tilde))
    bar = " ".join(str(v) for v in f.bar)
    return f"snr {p.n} {p.r}\ntilde {tilde}".rstrip() + f"\nbar {bar}".rstrip() + "\n"


def parse_weights(text: str) -> WeightFunction:
    from .maps import _content_lines, parse_header
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError("empty weight file", 0)
    params = parse_header(lines[0][1], lines[0][0])
    tilde, bar = None, None
    for k, line in lines[1:]:
        head, *vals = line.split()
        try:
            vals = [to_fraction(v) for v in vals]
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"line {k}: bad rational", 0) from None
        if head == "tilde":
            tilde = vals
        elif head == "bar":
            bar = vals
        else:
            raise ParseError(f"line {k}: expected 'tilde' or 'bar'", 0)
    if tilde is None or (bar is None and params.s):
        raise ParseError("weight file needs 'tilde' and 'bar' lines", 0)
    try:
        return WeightFunction.from_high_low(params, tilde, bar or [])
    except ValueError as exc:
        raise ParseError(str(exc), 0) from None


def full_sum(f: WeightFunction) -> Fraction:
    return sigma(f, full_string(f.params))
