"""Boolean partial maps into the 2-chain N < P, and their classification."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Union

from .errors import ParseError
from .poset import Involution, from_mask, iter_bits, to_mask
from .snr import SnrLattice, SnrParams, build_lattice, fixed_strings, format_string, full_string, parse_string

Space = Union[SnrLattice, Involution]


class Sign(enum.IntEnum):
    N = 0
    P = 1

    def __str__(self) -> str:
        return self.name


class MapFamily(enum.Enum):
    OP = "op"
    W_PLUS = "wplus"
    W_MINUS = "wminus"
    W_PLUS_NR = "wplus_nr"
    W_MINUS_NR = "wminus_nr"
    FC_PLUS = "fc_plus"
    FC_MINUS = "fc_minus"
    B_NR = "b_nr"
    BT_NR = "bt_nr"


@dataclass(frozen=True)
class PartialMap:
    """A boolean partial map stored as its P-set and N-set (element indices)."""

    space: Space = field(compare=False, repr=False)
    pos_mask: int
    neg_mask: int

    def __post_init__(self):
        if self.pos_mask & self.neg_mask:
            raise ValueError("an element cannot be both P and N")
        if (self.pos_mask | self.neg_mask) >> self.space.involution.size:
            raise ValueError("map assigns elements outside the poset")

    @classmethod
    def from_sets(cls, space: Space, positive: Iterable[int] = (), negative: Iterable[int] = ()) -> "PartialMap":
        return cls(space, to_mask(positive), to_mask(negative))

    @classmethod
    def from_signs(cls, space: Space, signs: Mapping[int, Sign]) -> "PartialMap":
        return cls.from_sets(space, [x for x, s in signs.items() if s == Sign.P],
                             [x for x, s in signs.items() if s == Sign.N])

    @classmethod
    def total(cls, space: Space, positive_mask: int) -> "PartialMap":
        full = (1 << space.involution.size) - 1
        return cls(space, positive_mask & full, full & ~positive_mask)

    @property
    def involution(self) -> Involution:
        return self.space.involution

    @property
    def domain_mask(self) -> int:
        return self.pos_mask | self.neg_mask

    @property
    def domain(self) -> frozenset[int]:
        return from_mask(self.domain_mask)

    @property
    def positives(self) -> frozenset[int]:
        return from_mask(self.pos_mask)

    @property
    def negatives(self) -> frozenset[int]:
        return from_mask(self.neg_mask)

    @property
    def is_total(self) -> bool:
        return self.domain_mask == (1 << self.involution.size) - 1

    def __len__(self) -> int:
        return self.domain_mask.bit_count()

    def sign(self, x: int) -> Sign | None:
        if self.pos_mask >> x & 1:
            return Sign.P
        if self.neg_mask >> x & 1:
            return Sign.N
        return None

    def __getitem__(self, x) -> Sign | None:
        return self.sign(_as_index(self.space, x))

    def restrict(self, z: Iterable[int] | int) -> "PartialMap":
        m = z if isinstance(z, int) else to_mask(z)
        return PartialMap(self.space, self.pos_mask & m, self.neg_mask & m)

    def items(self):
        for x in iter_bits(self.domain_mask):
            yield x, self.sign(x)


def _as_index(space: Space, x) -> int:
    if isinstance(x, int):
        return x
    if isinstance(space, SnrLattice):
        if isinstance(x, str):
            return space[x]
        return space.index(x)
    raise TypeError(f"cannot index {type(space).__name__} with {x!r}")


def extends_leq(a: PartialMap, b: PartialMap) -> bool:
    """a <= b in the extension order: b restricted to dom(a) equals a."""
    return (a.pos_mask & ~b.pos_mask) == 0 and (a.neg_mask & ~b.neg_mask) == 0


def positives(a: PartialMap) -> frozenset[int]:
    return a.positives


def negatives(a: PartialMap) -> frozenset[int]:
    return a.negatives


def is_up_positive(a: PartialMap) -> bool:
    """Everything in the domain lying above a positive is positive."""
    p = a.involution.poset
    return p.up_mask(a.pos_mask) & a.domain_mask & ~a.pos_mask == 0


def is_down_negative(a: PartialMap) -> bool:
    p = a.involution.poset
    return p.down_mask(a.neg_mask) & a.domain_mask & ~a.neg_mask == 0


def is_order_preserving(a: PartialMap) -> bool:
    """x <= y implies a(x) <= a(y), checked pair by pair."""
    if not a.is_total:
        raise ValueError("order preservation is defined for total maps")
    p = a.involution.poset
    for x in range(p.size):
        sx = a.sign(x)
        for y in iter_bits(p.up[x]):
            if sx > a.sign(y):
                return False
    return True


def is_complemented_positive(a: PartialMap) -> bool:
    """The complement of every negative is a positive."""
    return a.involution.complement_mask(a.neg_mask) & ~a.pos_mask == 0


def is_complemented_negative(a: PartialMap) -> bool:
    return a.involution.complement_mask(a.pos_mask) & ~a.neg_mask == 0


def minimal_positives(a: PartialMap) -> frozenset[int]:
    return from_mask(a.involution.poset.minimals_mask(a.pos_mask))


def maximal_negatives(a: PartialMap) -> frozenset[int]:
    return from_mask(a.involution.poset.maximals_mask(a.neg_mask))


def complemented_elements(space: Space) -> frozenset[int]:
    return space.involution.complemented_elements()


def in_bnr(a: PartialMap) -> bool:
    """All xi strings are P and all eta strings are N in the domain."""
    lat = _require_snr(a)
    xis, etas = fixed_strings(lat.params)
    return all(a.sign(w.mask) == Sign.P for w in xis) and all(a.sign(w.mask) == Sign.N for w in etas)


def _require_snr(a: PartialMap) -> SnrLattice:
    if not isinstance(a.space, SnrLattice):
        raise TypeError("this family is only defined on S(n, r)")
    return a.space


def is_weighted_plus(a: PartialMap) -> bool:
    return is_up_positive(a) and is_down_negative(a) and is_complemented_positive(a)


def is_weighted_minus(a: PartialMap) -> bool:
    return is_up_positive(a) and is_down_negative(a) and is_complemented_negative(a)


def classify(a: PartialMap, family: MapFamily) -> bool:
    if family is MapFamily.OP:
        return a.is_total and is_order_preserving(a)
    if family is MapFamily.W_PLUS:
        return a.is_total and is_weighted_plus(a)
    if family is MapFamily.W_MINUS:
        return a.is_total and is_weighted_minus(a)
    if family is MapFamily.B_NR:
        return in_bnr(a)
    if family is MapFamily.BT_NR:
        return a.is_total and in_bnr(a)
    if family in (MapFamily.W_PLUS_NR, MapFamily.W_MINUS_NR):
        lat = _require_snr(a)
        plus = family is MapFamily.W_PLUS_NR
        want = Sign.P if plus else Sign.N
        if not (a.is_total and in_bnr(a) and a.sign(lat.params.full_mask) == want):
            return False
        return is_weighted_plus(a) if plus else is_weighted_minus(a)
    if family in (MapFamily.FC_PLUS, MapFamily.FC_MINUS):
        from .formal import in_fc_minus, in_fc_plus
        return in_fc_plus(a) if family is MapFamily.FC_PLUS else in_fc_minus(a)
    raise ValueError(family)


# map text format: "snr n r" then "<string> <P|N>" per assignment


def format_map(a: PartialMap) -> str:
    lat = _require_snr(a)
    rows = sorted((format_string(lat.string(x)), str(s)) for x, s in a.items())
    lines = [f"snr {lat.params.n} {lat.params.r}"] + [f"{w} {s}" for w, s in rows]
    return "\n".join(lines) + "\n"


def parse_header(line: str, lineno: int = 1) -> SnrParams:
    parts = line.split()
    if len(parts) != 3 or parts[0] != "snr":
        raise ParseError(f"line {lineno}: expected 'snr <n> <r>'", 0)
    try:
        return SnrParams(int(parts[1]), int(parts[2]))
    except ValueError as exc:
        raise ParseError(f"line {lineno}: {exc}", 0) from None


def _content_lines(text: str):
    for k, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield k, line


def parse_map(text: str, lattice: SnrLattice | None = None) -> PartialMap:
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError("empty map file", 0)
    params = parse_header(lines[0][1], lines[0][0])
    if lattice is None:
        lattice = build_lattice(params)
    elif lattice.params != params:
        raise ParseError(f"header {params} does not match lattice {lattice.params}", 0)
    pos, neg = 0, 0
    for k, line in lines[1:]:
        parts = line.split()
        if len(parts) != 2 or parts[1] not in ("P", "N"):
            raise ParseError(f"line {k}: expected '<string> <P|N>'", 0)
        try:
            w = parse_string(parts[0], params)
        except ParseError as exc:
            raise ParseError(f"line {k}: {exc}", exc.position) from None
        bit = 1 << w.mask
        if (pos | neg) & bit:
            raise ParseError(f"line {k}: {parts[0]} assigned twice", 0)
        if parts[1] == "P":
            pos |= bit
        else:
            neg |= bit
    return PartialMap(lattice, pos, neg)


def map_from_listing(lattice: SnrLattice, listing: str) -> PartialMap:
    """Build a map from the compact form ``"321|02N, 100|01N, 000|00P"``."""
    pos, neg = 0, 0
    for item in listing.replace("{", "").replace("}", "").split(","):
        item = item.strip()
        if not item:
            continue
        w, s = lattice.parse(item[:-1]), item[-1]
        if s == "P":
            pos |= 1 << w.mask
        elif s == "N":
            neg |= 1 << w.mask
        else:
            raise ParseError(f"bad sign in {item!r}", len(item) - 1)
    return PartialMap(lattice, pos, neg)


def full_sign(a: PartialMap) -> Sign | None:
    lat = _require_snr(a)
    return a.sign(full_string(lat.params).mask)
