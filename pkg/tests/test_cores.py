import pytest

from snrmaps.cores import (CorePair, basis_violation, enumerate_antichains, enumerate_bases, enumerate_family,
                           fundamental_core_minus, fundamental_core_plus, h_minus, h_plus, is_core_brute,
                           is_w_basis_minus, is_w_basis_plus, n_core, span_minus, span_plus)
from snrmaps.errors import CapExceeded, NotABasis, NotWeighted
from snrmaps.maps import MapFamily, PartialMap, Sign, classify, map_from_listing, maximal_negatives
from snrmaps.poset import chain, validate_involution

import oracles
from conftest import lattice

EX51_BASIS = "321|02N, 100|01N, 000|00P, 200|01P"
EX52_CORE = "320|02N, 321|12P, 000|00P, 000|01N"
EX58_CORE = "321|012N, 000|001N, 100|003P, 000|000P"


def pair_of(lat, listing):
    return CorePair.from_map(map_from_listing(lat, listing))


def test_example_minus_round_trip(s53):
    pair = pair_of(s53, EX51_BASIS)
    assert is_w_basis_minus(pair, s53)
    a = span_minus(pair, s53)
    assert classify(a, MapFamily.W_MINUS_NR)
    assert s53.names(maximal_negatives(a)) == ["100|01", "321|02"]
    assert h_minus(a) == pair


def test_example_plus_round_trip(s53):
    pair = pair_of(s53, EX52_CORE)
    assert is_w_basis_plus(pair, s53)
    a = span_plus(pair, s53)
    assert classify(a, MapFamily.W_PLUS_NR)
    assert fundamental_core_plus(a).core == map_from_listing(s53, EX52_CORE)


def test_six_three_minus_example(s63):
    pair = pair_of(s63, EX58_CORE)
    a = span_minus(pair, s63)
    assert classify(a, MapFamily.W_MINUS_NR)
    assert fundamental_core_minus(a).pair == pair
    assert a["321|123"] == Sign.N
    assert all(a[w] == Sign.P for w in ("300|003", "100|002", "200|001"))


def test_n_core_of_spanned_map(s53):
    a = span_minus(pair_of(s53, EX51_BASIS), s53)
    core = n_core(a)
    assert core.negatives == maximal_negatives(a)
    assert {s53["200|01"], s53["000|00"]} <= core.positives


def test_constant_maps_cores(s32):
    all_p = PartialMap.total(s32, 0xFF)
    report = fundamental_core_plus(all_p)
    assert report.core.positives == s32.poset.minimals(range(8)) and not report.core.negatives
    all_n = PartialMap.total(s32, 0)
    report = fundamental_core_minus(all_n)
    assert report.core.negatives == s32.poset.maximals(range(8)) and not report.core.positives


def test_fundamental_core_rejects_non_members(s32):
    all_n = PartialMap.total(s32, 0)
    with pytest.raises(NotWeighted):
        fundamental_core_plus(all_n)
    with pytest.raises(NotWeighted):
        fundamental_core_plus(map_from_listing(s32, "21|0P"))
    with pytest.raises(NotWeighted):
        n_core(PartialMap.total(s32, 1 << s32["00|1"]))


def test_basis_failures(s32):
    assert basis_violation(CorePair.of([], []), s32, True) == "B3+"
    assert basis_violation(CorePair.of([], []), s32, False) == "B3-"
    bad = CorePair.of([s32["10|0"], s32["00|0"]], [])
    assert basis_violation(bad, s32, True) == "antichain"
    overlap = CorePair.of([s32["10|0"]], [s32["10|0"]])
    assert basis_violation(overlap, s32, True) == "disjoint"
    with pytest.raises(NotABasis):
        span_plus(CorePair.of([], []), s32)


def test_span_of_minimum_is_all_p(s32):
    a = span_plus(CorePair.of([s32["00|1"]], []), s32)
    assert a.is_total and not a.negatives
    b = span_minus(CorePair.of([], [s32["21|0"]]), s32)
    assert b.is_total and not b.positives


def test_two_chain_enumeration():
    inv = validate_involution(chain(2), [1, 0])
    members = list(enumerate_family(inv, MapFamily.W_PLUS))
    assert sorted((a.pos_mask, a.neg_mask) for a in members) == [(0b10, 0b01), (0b11, 0)]


@pytest.mark.parametrize("n,r", [(3, 2), (4, 2), (4, 3)])
def test_family_counts_match_full_scan(n, r):
    lat = lattice(n, r)
    for plus in (True, False):
        for nr, fam in ((False, MapFamily.W_PLUS if plus else MapFamily.W_MINUS),
                        (True, MapFamily.W_PLUS_NR if plus else MapFamily.W_MINUS_NR)):
            got = {frozenset(a.positives) for a in enumerate_family(lat, fam)}
            assert got == set(oracles.weighted_family(n, r, plus, nr))


def test_frozen_family_counts():
    # values from oracles.weighted_family; S(5,3) from the DFS only
    expect = {(3, 2): (9, 9, 3, 1), (4, 2): (36, 36, 8, 8), (4, 3): (30, 30, 8, 1), (5, 3): (300, 300, 86, 29)}
    fams = (MapFamily.W_PLUS, MapFamily.W_MINUS, MapFamily.W_PLUS_NR, MapFamily.W_MINUS_NR)
    for (n, r), counts in expect.items():
        lat = lattice(n, r)
        assert tuple(sum(1 for _ in enumerate_family(lat, f)) for f in fams) == counts


def test_enumeration_members_classify(s32):
    for fam in (MapFamily.W_PLUS, MapFamily.W_MINUS, MapFamily.W_PLUS_NR, MapFamily.W_MINUS_NR):
        maps = list(enumerate_family(s32, fam))
        assert len(set(maps)) == len(maps)
        assert all(classify(a, fam) for a in maps)


def test_enumeration_cap(s63):
    with pytest.raises(CapExceeded):
        next(enumerate_family(s63, MapFamily.W_PLUS))


def test_enumerate_extending(s63):
    base = map_from_listing(s63, EX58_CORE)
    got = list(enumerate_family(s63, MapFamily.W_MINUS_NR, cap=64, extending=base))
    assert got == [span_minus(CorePair.from_map(base), s63)]


def test_is_core_brute_trivial_cases(s32):
    members = list(enumerate_family(s32, MapFamily.W_PLUS))
    for a in members:
        assert is_core_brute(0xFF, a, MapFamily.W_PLUS, members)
        assert not is_core_brute(0, a, MapFamily.W_PLUS, members)
        assert is_core_brute(fundamental_core_plus(a).core.domain, a, MapFamily.W_PLUS, members)
        assert is_core_brute(n_core(a).domain_mask, a, MapFamily.W_PLUS, members)


def test_antichain_counts():
    assert sum(1 for _ in enumerate_antichains(lattice(3, 2))) == 15
    assert sum(1 for _ in enumerate_antichains(lattice(4, 2))) == 70


@pytest.mark.parametrize("n,r", [(3, 2), (4, 2)])
def test_bases_biject_with_maps(n, r):
    lat = lattice(n, r)
    for plus, fam in ((True, MapFamily.W_PLUS), (False, MapFamily.W_MINUS)):
        bases = list(enumerate_bases(lat, plus))
        maps = list(enumerate_family(lat, fam))
        assert len(bases) == len(maps)
        h = h_plus if plus else h_minus
        assert {h(a) for a in maps} == set(bases)
