"""Cores, fundamental cores and w±-bases of weighted boolean total maps.

Works on any finite strongly involution poset; S(n, r) is one instance.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import CapExceeded, NotABasis, NotWeighted
from .maps import MapFamily, PartialMap, Sign, Space, is_weighted_minus, is_weighted_plus
from .poset import from_mask, to_mask

ENUMERATION_CAP = 32


@dataclass(frozen=True)
class CorePair:
    """An ordered couple <positive_part | negative_part> of element sets."""

    positive: frozenset[int]
    negative: frozenset[int]

    @classmethod
    def of(cls, positive: Iterable[int], negative: Iterable[int]) -> "CorePair":
        return cls(frozenset(positive), frozenset(negative))

    @property
    def pos_mask(self) -> int:
        return to_mask(self.positive)

    @property
    def neg_mask(self) -> int:
        return to_mask(self.negative)

    def as_map(self, space: Space) -> PartialMap:
        return PartialMap(space, self.pos_mask, self.neg_mask)

    @classmethod
    def from_map(cls, a: PartialMap) -> "CorePair":
        return cls(a.positives, a.negatives)


@dataclass(frozen=True)
class CoreReport:
    core: PartialMap
    pair: CorePair
    family: MapFamily


def _require_total_weighted(a: PartialMap, plus: bool) -> None:
    ok = a.is_total and (is_weighted_plus(a) if plus else is_weighted_minus(a))
    if not ok:
        raise NotWeighted(f"map is not a {'+' if plus else '-'}WBTM")


def n_core(a: PartialMap) -> PartialMap:
    """Restriction of a to its minimal positives and maximal negatives."""
    if not (a.is_total and (is_weighted_plus(a) or is_weighted_minus(a))):
        raise NotWeighted("map is not a weighted boolean total map")
    p = a.involution.poset
    return a.restrict(p.minimals_mask(a.pos_mask) | p.maximals_mask(a.neg_mask))


def _core_masks(a: PartialMap, plus: bool) -> tuple[int, int]:
    inv = a.involution
    p = inv.poset
    min_pos = p.minimals_mask(a.pos_mask)
    max_neg = p.maximals_mask(a.neg_mask)
    if plus:
        return min_pos & ~inv.complement_mask(max_neg), max_neg
    return min_pos, max_neg & ~inv.complement_mask(min_pos)


def fundamental_core_plus(a: PartialMap) -> CoreReport:
    """Minimal positives not complementing a maximal negative, plus all maximal negatives."""
    _require_total_weighted(a, True)
    pos, neg = _core_masks(a, True)
    core = PartialMap(a.space, pos, neg)
    return CoreReport(core, CorePair.from_map(core), MapFamily.W_PLUS)


def fundamental_core_minus(a: PartialMap) -> CoreReport:
    _require_total_weighted(a, False)
    pos, neg = _core_masks(a, False)
    core = PartialMap(a.space, pos, neg)
    return CoreReport(core, CorePair.from_map(core), MapFamily.W_MINUS)


def fundamental_core(a: PartialMap, plus: bool) -> CoreReport:
    return fundamental_core_plus(a) if plus else fundamental_core_minus(a)


def h_plus(a: PartialMap) -> CorePair:
    return fundamental_core_plus(a).pair


def h_minus(a: PartialMap) -> CorePair:
    return fundamental_core_minus(a).pair


# bases


def basis_violation(pair: CorePair, space: Space, plus: bool) -> str | None:
    """Name of the first failing basis axiom, or None for a valid basis."""
    inv = space.involution
    p = inv.poset
    yp, yn = pair.pos_mask, pair.neg_mask
    if yp & yn:
        return "disjoint"
    if not p.is_antichain_mask(yp) or not p.is_antichain_mask(yn):
        return "antichain"
    full = p.full_mask
    if plus:
        if p.down_mask(yp) & inv.complement_mask(yn):
            return "B1+"
        upper = p.up_mask(yp) | p.up_mask(inv.complement_mask(yn))
        lower = p.down_mask(yn)
        if upper & lower:
            return "B2+"
        if upper | lower != full:
            return "B3+"
        return None
    if p.up_mask(yn) & inv.complement_mask(yp):
        return "B1-"
    lower = p.down_mask(yn) | p.down_mask(inv.complement_mask(yp))
    upper = p.up_mask(yp)
    if lower & upper:
        return "B2-"
    if lower | upper != full:
        return "B3-"
    return None


def is_w_basis_plus(pair: CorePair, space: Space) -> bool:
    return basis_violation(pair, space, True) is None


def is_w_basis_minus(pair: CorePair, space: Space) -> bool:
    return basis_violation(pair, space, False) is None


def span_plus(pair: CorePair, space: Space) -> PartialMap:
    """P on the up-closure of Y+ and of the complements of Y-, N below Y-."""
    bad = basis_violation(pair, space, True)
    if bad:
        raise NotABasis(f"not a w+-basis: {bad} fails")
    inv = space.involution
    p = inv.poset
    pos = p.up_mask(pair.pos_mask) | p.up_mask(inv.complement_mask(pair.neg_mask))
    return PartialMap(space, pos, p.down_mask(pair.neg_mask))


def span_minus(pair: CorePair, space: Space) -> PartialMap:
    bad = basis_violation(pair, space, False)
    if bad:
        raise NotABasis(f"not a w--basis: {bad} fails")
    inv = space.involution
    p = inv.poset
    neg = p.down_mask(pair.neg_mask) | p.down_mask(inv.complement_mask(pair.pos_mask))
    return PartialMap(space, p.up_mask(pair.pos_mask), neg)


def span(pair: CorePair, space: Space, plus: bool) -> PartialMap:
    return span_plus(pair, space) if plus else span_minus(pair, space)


# brute-force enumeration


_BASE_FAMILY = {
    MapFamily.W_PLUS: True,
    MapFamily.W_PLUS_NR: True,
    MapFamily.W_MINUS: False,
    MapFamily.W_MINUS_NR: False,
}


def _forced_signs(space: Space, family: MapFamily) -> dict[int, Sign]:
    if family not in (MapFamily.W_PLUS_NR, MapFamily.W_MINUS_NR):
        return {}
    from .snr import SnrLattice, fixed_strings
    if not isinstance(space, SnrLattice):
        raise TypeError(f"{family.name} is only defined on S(n, r)")
    xis, etas = fixed_strings(space.params)
    forced = {w.mask: Sign.P for w in xis}
    forced.update({w.mask: Sign.N for w in etas})
    full = space.params.full_mask
    want = Sign.P if family is MapFamily.W_PLUS_NR else Sign.N
    if forced.get(full, want) != want:
        return {full: None}  # contradictory requirements: empty family
    forced[full] = want
    return forced


def enumerate_family(space: Space, family: MapFamily, cap: int = ENUMERATION_CAP,
                     extending: PartialMap | None = None) -> Iterator[PartialMap]:
    """Every total map of the family, each exactly once, in a fixed order.

    Depth-first over the elements from the top of a linear extension down;
    an element may be P only if everything above it is P, and the
    complemented-sign condition is checked as soon as both ends are decided.
    With ``extending`` only the members agreeing with that partial map are
    produced.
    """
    if family not in _BASE_FAMILY:
        raise ValueError(f"cannot enumerate {family}")
    inv = space.involution
    p = inv.poset
    if p.size > cap:
        raise CapExceeded(f"|X| = {p.size} exceeds enumeration cap {cap}")
    plus = _BASE_FAMILY[family]
    forced = _forced_signs(space, family)
    if extending is not None:
        for x, s in extending.items():
            if forced.get(x, s) != s:
                return
            forced[x] = s
    if None in forced.values():
        return
    order = p.linear_extension()[::-1]
    comp = inv.complement
    strict_up = [p.up[x] & ~(1 << x) for x in range(p.size)]

    def rec(k: int, pos: int, neg: int):
        if k == len(order):
            yield PartialMap(space, pos, neg)
            return
        x = order[k]
        want = forced.get(x)
        cbit = 1 << comp[x]
        bit = 1 << x
        if want != Sign.N and not (strict_up[x] & neg):
            # x -> P; in the minus family c(x) must not be P
            if plus or not (pos & cbit):
                yield from rec(k + 1, pos | bit, neg)
        if want != Sign.P:
            # x -> N; in the plus family c(x) must not be N
            if not plus or not (neg & cbit):
                if not (plus and comp[x] == x):
                    yield from rec(k + 1, pos, neg | bit)

    yield from rec(0, 0, 0)


def is_core_brute(w: Iterable[int] | int, a: PartialMap, family: MapFamily,
                  members: Sequence[PartialMap] | None = None, cap: int = ENUMERATION_CAP) -> bool:
    """True iff exactly one member of the family agrees with a on w."""
    m = w if isinstance(w, int) else to_mask(w)
    target_pos, target_neg = a.pos_mask & m, a.neg_mask & m
    if members is None:
        members = enumerate_family(a.space, family, cap)
    hits = 0
    for b in members:
        if b.pos_mask & m == target_pos and b.neg_mask & m == target_neg:
            hits += 1
            if hits == 2:
                return False
    return hits == 1


def enumerate_antichains(space: Space) -> Iterator[int]:
    """All antichains as bitmasks, the empty one first."""
    p = space.involution.poset
    comparable = [p.up[x] | p.down[x] for x in range(p.size)]

    def rec(start: int, chosen: int, blocked: int):
        yield chosen
        for x in range(start, p.size):
            if not blocked >> x & 1:
                yield from rec(x + 1, chosen | (1 << x), blocked | comparable[x])

    yield from rec(0, 0, 0)


def enumerate_bases(space: Space, plus: bool, cap: int = ENUMERATION_CAP) -> Iterator[CorePair]:
    """All w+-bases (or w--bases) by scanning pairs of antichains against the axioms."""
    p = space.involution.poset
    if p.size > cap:
        raise CapExceeded(f"|X| = {p.size} exceeds enumeration cap {cap}")
    antichains = list(enumerate_antichains(space))
    for yn in antichains:
        for yp in antichains:
            if yp & yn:
                continue
            pair = CorePair(from_mask(yp), from_mask(yn))
            if basis_violation(pair, space, plus) is None:
                yield pair
