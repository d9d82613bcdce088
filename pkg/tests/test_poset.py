import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from snrmaps.errors import InvolutionViolation, PartialOrderViolation
from snrmaps.poset import (boolean_lattice, build_poset, chain, from_mask, poset_from_masks, to_mask,
                           validate_involution)

import oracles
from conftest import lattice


def test_mask_round_trip():
    assert from_mask(to_mask({0, 3, 5})) == {0, 3, 5}
    assert to_mask([]) == 0


def test_chain_covers():
    assert chain(2).cover_edges() == [(0, 1)]
    assert chain(5).cover_edges() == [(0, 1), (1, 2), (2, 3), (3, 4)]


def test_antichain_poset_has_no_covers():
    p = build_poset(4, lambda x, y: x == y)
    assert p.cover_edges() == []
    assert p.is_antichain(range(4))


def test_s32_cover_count_matches_naive_oracle():
    # frozen from the naive triple loop in oracles.covers
    assert len(oracles.covers(3, 2)) == 10
    assert sorted(lattice(3, 2).poset.cover_edges()) == oracles.covers(3, 2)


@pytest.mark.parametrize("n,r", [(2, 1), (3, 1), (4, 2), (4, 1), (4, 4)])
def test_covers_agree_with_oracle(n, r):
    assert sorted(lattice(n, r).poset.cover_edges()) == oracles.covers(n, r)


def test_s32_closures(s32):
    p = s32.poset
    down = s32.names(p.down_closure([s32["10|0"]]))
    assert down == ["00|0", "00|1", "10|0", "10|1"]
    up = s32.names(p.up_closure([s32["10|1"]]))
    assert up == ["10|0", "10|1", "20|0", "20|1", "21|0", "21|1"]


def test_antichain_examples(s32):
    p = s32.poset
    assert p.is_antichain([])
    assert not p.is_antichain([s32["10|0"], s32["10|1"]])
    assert not p.is_antichain([s32["10|0"], s32["00|0"]])
    assert p.is_antichain([s32["21|1"], s32["20|0"]])


def test_minimals_maximals(s32):
    p = s32.poset
    allx = range(s32.size)
    assert s32.names(p.minimals(allx)) == ["00|1"]
    assert s32.names(p.maximals(allx)) == ["21|0"]


def test_poset_validation_rejects_cycles():
    with pytest.raises(PartialOrderViolation) as err:
        poset_from_masks([0b11, 0b11])
    assert err.value.axiom == "antisymmetry"
    with pytest.raises(PartialOrderViolation):
        build_poset(3, [[True, True, False], [False, True, True], [False, False, True]])


def test_identity_on_two_chain_is_not_strong():
    with pytest.raises(InvolutionViolation) as err:
        validate_involution(chain(2), [0, 1])
    assert err.value.axiom == "I3"


def test_non_antitone_map_fails_i2():
    with pytest.raises(InvolutionViolation) as err:
        validate_involution(chain(3), [0, 1, 2], require_strong=False)
    assert err.value.axiom == "I2"


def test_non_involution_fails_i1():
    with pytest.raises(InvolutionViolation) as err:
        validate_involution(chain(3), [1, 2, 0])
    assert err.value.axiom == "I1"


def test_boolean_lattice_is_sip():
    inv = boolean_lattice(2)
    assert inv.strong
    assert inv.complemented_elements() == {3}
    assert len(inv.poset.cover_edges()) == 4


def test_two_chain_swap_is_sip():
    inv = validate_involution(chain(2), [1, 0])
    assert inv.strong and inv.c(0) == 1


@given(st.integers(0, 255))
def test_closures_are_closed(mask):
    p = lattice(3, 2).poset
    z = from_mask(mask)
    assert p.is_down_set(p.down_closure(z))
    assert p.is_up_set(p.up_closure(z))
    assert z <= p.down_closure(z) and z <= p.up_closure(z)
    assert p.is_antichain(p.minimals(z)) and p.is_antichain(p.maximals(z))
    assert p.down_closure(p.maximals(z)) == p.down_closure(z)


@settings(max_examples=50)
@given(st.integers(0, (1 << 32) - 1))
def test_complement_reverses_closures(mask):
    inv = lattice(5, 3).involution
    p = inv.poset
    z = from_mask(mask)
    assert inv.complement_set(p.up_closure(z)) == p.down_closure(inv.complement_set(z))


def test_linear_extension_respects_order():
    p = lattice(4, 2).poset
    pos = {x: k for k, x in enumerate(p.linear_extension())}
    assert all(pos[x] <= pos[y] for x in range(p.size) for y in range(p.size) if p.leq(x, y))


def test_r_outside_range_rejected():
    from snrmaps.snr import SnrParams
    with pytest.raises(ValueError):
        SnrParams(4, 0)
    with pytest.raises(ValueError):
        SnrParams(3, 4)
