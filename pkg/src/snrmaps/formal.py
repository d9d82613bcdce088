"""Complemented-pointwise maps, formally compatible families, and the Q2/Q3 scan."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from .cores import ENUMERATION_CAP, enumerate_family
from .errors import CapExceeded
from .maps import MapFamily, PartialMap, Sign, is_order_preserving
from .snr import SnrLattice, SnrParams, SnrString, build_lattice, format_string, partitions

MAX_STAR = 12


@dataclass(frozen=True)
class PointwiseViolation:
    string: SnrString
    blocks: tuple[SnrString, ...]
    sign: Sign

    def __str__(self) -> str:
        return f"{self.string} : " + " ≀ ".join(map(str, self.blocks))


def _lattice(a: PartialMap) -> SnrLattice:
    if not isinstance(a.space, SnrLattice):
        raise TypeError("complemented pointwise is defined on S(n, r)")
    return a.space


def pointwise_violations(a: PartialMap, max_star: int = MAX_STAR) -> Iterator[PointwiseViolation]:
    """Every (w, partition) with all blocks in dom(a) and none sharing a(w)'s sign."""
    lat = _lattice(a)
    dom = a.domain_mask
    for x, s in a.items():
        w = lat.string(x)
        if len(w) > max_star:
            raise CapExceeded(f"|star({w})| = {len(w)} exceeds {max_star}")
        same = a.pos_mask if s == Sign.P else a.neg_mask
        for blocks in partitions(w):
            if any(not dom >> b.mask & 1 for b in blocks):
                continue
            if not any(same >> b.mask & 1 for b in blocks):
                yield PointwiseViolation(w, blocks, s)


def is_complemented_pointwise(a: PartialMap) -> bool:
    return next(pointwise_violations(a), None) is None


def pointwise_witness(a: PartialMap) -> PointwiseViolation | None:
    return next(pointwise_violations(a), None)


def is_violating_partition(a: PartialMap, w: SnrString, blocks) -> bool:
    """Is ``blocks`` an in-domain partition of w none of whose blocks shares a(w)'s sign?"""
    s = a.sign(w.mask)
    if s is None:
        return False
    union = 0
    for b in blocks:
        if not b.mask or union & b.mask or a.sign(b.mask) is None:
            return False
        union |= b.mask
    return union == w.mask and all(a.sign(b.mask) != s for b in blocks)


def _in_fc(a: PartialMap, want: Sign) -> bool:
    lat = _lattice(a)
    if not a.is_total or a.sign(lat.params.full_mask) != want:
        return False
    return is_order_preserving(a) and is_complemented_pointwise(a)


def in_fc_plus(a: PartialMap) -> bool:
    """Order-preserving, complemented pointwise, full string P.

    Membership in BT(n, r) (xi strings P, eta strings N) is not part of the
    test; ``maps.in_bnr`` checks it separately.
    """
    return _in_fc(a, Sign.P)


def in_fc_minus(a: PartialMap) -> bool:
    return _in_fc(a, Sign.N)


@dataclass(frozen=True)
class ConjectureReport:
    params: SnrParams
    which: str
    family_count: int
    fc_count: int
    compatible_count: int
    witness: PartialMap | None = field(default=None, compare=False)

    @property
    def verdict(self) -> str:
        return "EQUAL" if self.witness is None else "STRICT_WITH_WITNESS"

    def to_json(self) -> dict:
        out = {
            "n": self.params.n,
            "r": self.params.r,
            "which": self.which,
            "family_count": self.family_count,
            "fc_count": self.fc_count,
            "compatible_count": self.compatible_count,
            "verdict": self.verdict,
        }
        if self.witness is not None:
            lat = self.witness.space
            out["witness"] = {format_string(lat.string(x)): str(s) for x, s in self.witness.items()}
        return out


def conjecture_scan(params: SnrParams, which: str = "q2", cap: int = ENUMERATION_CAP) -> ConjectureReport:
    """Compare the formally compatible family with the images of compatible total systems.

    Each FC member is decided through its weighted core system (the local
    criteria make that equivalent to deciding the full system).
    """
    from .systems import compatible, core_system
    which = which.lower()
    if which not in ("q2", "q3"):
        raise ValueError("which must be 'q2' or 'q3'")
    plus = which == "q2"
    lattice = build_lattice(params)
    if lattice.size > cap:
        raise CapExceeded(f"|S({params.n},{params.r})| = {lattice.size} exceeds cap {cap}")
    family = MapFamily.W_PLUS_NR if plus else MapFamily.W_MINUS_NR
    fc = in_fc_plus if plus else in_fc_minus
    n_family = n_fc = n_compat = 0
    witness = None
    for a in enumerate_family(lattice, family, cap):
        n_family += 1
        if not fc(a):
            continue
        n_fc += 1
        if compatible(core_system(a, plus)).feasible:
            n_compat += 1
        elif witness is None:
            witness = a
    return ConjectureReport(params, which, n_family, n_fc, n_compat, witness)
