import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from snrmaps.errors import CapExceeded, ParseError
from snrmaps.snr import (SnrParams, SnrString, build_lattice, complement, empty_string, eta, format_string,
                         full_string, leq, parse_string, partitions, unstar, xi)

import oracles
from conftest import lattice

EXAMPLE_S32 = {"21|0", "21|1", "10|0", "20|0", "10|1", "20|1", "00|1", "00|0"}


def test_s32_strings():
    assert {format_string(w) for w in lattice(3, 2).strings()} == EXAMPLE_S32


def test_s11_degenerate():
    assert [format_string(w) for w in lattice(1, 1).strings()] == ["0|", "1|"]


@pytest.mark.parametrize("n", range(1, 11))
def test_size_is_power_of_two(n):
    for r in {1, (n + 1) // 2, n}:
        lat = build_lattice(SnrParams(n, r))
        assert lat.size == 2 ** n
        assert len({format_string(w) for w in lat.strings()}) == 2 ** n


def test_min_max():
    lat = lattice(5, 3)
    assert format_string(lat.minimum()) == "000|12"
    assert format_string(lat.maximum()) == "321|00"
    p = lat.poset
    assert p.minimals(range(lat.size)) == {lat.index(lat.minimum())}
    assert p.maximals(range(lat.size)) == {lat.index(lat.maximum())}


def test_leq_examples():
    p = SnrParams(3, 2)
    a, b = parse_string("10|1", p), parse_string("20|0", p)
    assert leq(a, b) and not leq(b, a) and leq(a, a)


@pytest.mark.parametrize("n,r", [(3, 2), (4, 1), (4, 3), (5, 2)])
def test_order_matches_naive_oracle(n, r):
    lat = lattice(n, r)
    xs = oracles.all_strings(n, r)
    for v in range(lat.size):
        for w in range(lat.size):
            assert lat.poset.leq(v, w) == oracles.leq(xs[v], xs[w], n, r)
            assert lat.poset.leq(v, w) == leq(lat.string(v), lat.string(w))


def test_complement_examples():
    p = SnrParams(7, 4)
    assert format_string(complement(parse_string("4310|001", p))) == "2000|023"
    q = SnrParams(3, 2)
    assert format_string(complement(parse_string("10|0", q))) == "20|1"
    assert complement(full_string(p)) == empty_string(p)


@pytest.mark.parametrize("n", range(1, 7))
def test_complement_strong_involution_exhaustive(n):
    for r in range(1, n + 1):
        inv = lattice(n, r).involution
        assert inv.strong
        c = inv.complement
        p = inv.poset
        assert all(c[c[x]] == x and c[x] != x for x in range(p.size))
        assert all(p.leq(c[y], c[x]) for x in range(p.size) for y in range(p.size) if p.leq(x, y))


def test_star_example():
    w = parse_string("4310|013", SnrParams(7, 4))
    assert w.star() == {("t", 1), ("t", 3), ("t", 4), ("b", 1), ("b", 3)}
    assert empty_string(SnrParams(7, 4)).star() == frozenset()


def test_star_round_trip_s42():
    p = SnrParams(4, 2)
    for w in lattice(4, 2).strings():
        assert unstar(w.star(), p) == w


def test_fixed_strings():
    assert format_string(xi(0, SnrParams(5, 3))) == "000|00"
    assert format_string(eta(1, SnrParams(6, 3))) == "000|001"
    assert format_string(full_string(SnrParams(5, 3))) == "321|12"
    assert format_string(xi(2, SnrParams(5, 3))) == "200|00"


def test_partition_example_large():
    p = SnrParams(11, 7)
    w = parse_string("7543100|0013", p)
    want = {parse_string(t, p) for t in ("7000000|0000", "5430000|0001", "1000000|0003")}
    assert any(set(blocks) == want for blocks in partitions(w))


def test_partition_counts_are_bell_numbers():
    p = SnrParams(5, 3)
    assert list(partitions(empty_string(p))) == []
    single = parse_string("100|00", p)
    assert list(partitions(single)) == [(single,)]
    w = parse_string("310|02", p)
    assert len(list(partitions(w))) == 5
    assert sum(1 for _ in oracles.set_partitions(range(3))) == 5
    assert len(list(partitions(full_string(p)))) == 52


@given(st.integers(0, 63))
def test_partitions_are_set_partitions(mask):
    p = SnrParams(6, 3)
    w = SnrString(p, mask)
    seen = set()
    for blocks in partitions(w):
        assert all(b.mask for b in blocks)
        union = 0
        for b in blocks:
            assert union & b.mask == 0
            union |= b.mask
        assert union == mask
        key = frozenset(b.mask for b in blocks)
        assert key not in seen
        seen.add(key)
    bell = sum(1 for _ in oracles.set_partitions(range(mask.bit_count())))
    assert len(seen) == (bell if mask else 0)


def test_parse_examples():
    w = parse_string("321|02", SnrParams(5, 3))
    assert w.left == (3, 2, 1) and w.right == (2,)
    assert parse_string("000|000", SnrParams(6, 3)).mask == 0
    with pytest.raises(ParseError) as err:
        parse_string("312|00", SnrParams(5, 3))
    assert err.value.position == 2


@pytest.mark.parametrize("text", ["", "21", "21|0|1", "2a|0", "22|0", "21|10", "3|0"])
def test_parse_rejects(text):
    with pytest.raises(ParseError):
        parse_string(text, SnrParams(3, 2))


def test_token_form_for_wide_strings():
    p = SnrParams(12, 10)
    w = SnrString(p, p.full_mask)
    text = format_string(w)
    assert text == "10.9.8.7.6.5.4.3.2.1|1.2"
    assert parse_string(text, p) == w


@given(st.integers(1, 9), st.data())
def test_format_parse_round_trip(n, data):
    r = data.draw(st.integers(1, n))
    p = SnrParams(n, r)
    w = SnrString(p, data.draw(st.integers(0, p.size - 1)))
    assert parse_string(format_string(w), p) == w


def test_dense_order_cap():
    lat = build_lattice(SnrParams(13, 6))
    assert lat.size == 2 ** 13
    with pytest.raises(CapExceeded):
        lat.poset
    with pytest.raises(CapExceeded):
        build_lattice(SnrParams(21, 3))


def test_graded_sizes_consistent():
    # 2^n strings split by star size into binomial layers
    lat = lattice(6, 3)
    counts = [0] * 7
    for w in lat.strings():
        counts[len(w)] += 1
    assert counts == [math.comb(6, k) for k in range(7)]
