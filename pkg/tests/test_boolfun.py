"""Tests for truth tables, Walsh/Mobius transforms, bentness, and file I/O."""

import random

import numpy as np
import pytest

from spreadbent.field import field_ctx
from spreadbent.boolfun import (
    MAX_N,
    TruthTable,
    anf,
    degree,
    is_bent,
    load_tt,
    mobius_transform,
    save_tt,
    walsh_at,
    walsh_at_trace,
    walsh_spectrum,
)


def random_tt(n, seed):
    rng = random.Random(seed)
    return TruthTable(n, [rng.randrange(2) for _ in range(1 << n)])


def inner_product_tt(m):
    """f(x, y) = <x, y> on n = 2m bits — the canonical bent function."""
    idx = np.arange(1 << (2 * m))
    x = idx & ((1 << m) - 1)
    y = idx >> m
    return TruthTable(2 * m, (np.bitwise_count(x & y) & 1).astype(np.uint8))


# ---------------------------------------------------------------------------
# TruthTable basics


def test_validation():
    with pytest.raises(ValueError):
        TruthTable(0, [])
    with pytest.raises(ValueError):
        TruthTable(MAX_N + 1, [0])
    with pytest.raises(ValueError):
        TruthTable(2, [0, 1, 0])  # wrong length
    with pytest.raises(ValueError):
        TruthTable(1, [0, 2])  # not a bit


def test_weight_balance_call():
    tt = TruthTable(2, [0, 1, 1, 0])
    assert tt.weight() == 2
    assert tt.is_balanced()
    assert tt(0) == 0 and tt(1) == 1
    assert not TruthTable(2, [0, 0, 0, 1]).is_balanced()


def test_equality_and_immutability():
    a = TruthTable(2, [0, 1, 0, 0])
    b = TruthTable(2, [0, 1, 0, 0])
    assert a == b and hash(a) == hash(b)
    assert a != TruthTable(2, [0, 1, 0, 1])
    with pytest.raises(ValueError):
        a.bits[0] = 1


def test_complement():
    tt = random_tt(5, 1)
    c = tt.complement()
    assert c.weight() == 32 - tt.weight()
    assert c.complement() == tt


# ---------------------------------------------------------------------------
# Walsh spectrum


def test_spectrum_of_constants():
    z = TruthTable(3, np.zeros(8, dtype=np.uint8))
    assert list(walsh_spectrum(z)) == [8, 0, 0, 0, 0, 0, 0, 0]
    assert list(walsh_spectrum(z.complement())) == [-8, 0, 0, 0, 0, 0, 0, 0]


def test_spectrum_of_linear_function():
    # f = <w, x> concentrates the whole mass at w
    n, w = 4, 0b1011
    idx = np.arange(16)
    tt = TruthTable(n, (np.bitwise_count(idx & w) & 1).astype(np.uint8))
    s = walsh_spectrum(tt)
    assert s[w] == 16
    assert np.count_nonzero(s) == 1


@pytest.mark.parametrize("n", [1, 3, 6])
def test_spectrum_matches_direct_sum(n):
    tt = random_tt(n, n)
    s = walsh_spectrum(tt)
    for w in range(1 << n):
        assert s[w] == walsh_at(tt, w)


@pytest.mark.parametrize("n", [4, 8, 11])
def test_parseval(n):
    s = walsh_spectrum(random_tt(n, n)).astype(np.int64)
    assert int((s * s).sum()) == 1 << (2 * n)


def test_trace_pairing_gives_same_multiset():
    ctx = field_ctx(3)
    tt = random_tt(6, 99)
    direct = sorted(int(v) for v in walsh_spectrum(tt))
    via_trace = sorted(walsh_at_trace(tt, ctx, u, v)
                       for u in range(8) for v in range(8))
    assert direct == via_trace


def test_walsh_at_trace_arity_check():
    with pytest.raises(ValueError):
        walsh_at_trace(random_tt(5, 0), field_ctx(3), 1, 1)


# ---------------------------------------------------------------------------
# bentness


def test_inner_product_is_bent():
    for m in (2, 3):
        tt = inner_product_tt(m)
        assert is_bent(tt)
        assert is_bent(tt.complement())
        s = walsh_spectrum(tt)
        assert set(map(int, s)) == {1 << m, -(1 << m)}


def test_constant_and_linear_are_not_bent():
    assert not is_bent(TruthTable(4, np.zeros(16, dtype=np.uint8)))
    idx = np.arange(16)
    lin = TruthTable(4, (idx & 1).astype(np.uint8))
    assert not is_bent(lin)


def test_bent_rejects_odd_arity():
    with pytest.raises(ValueError):
        is_bent(random_tt(5, 2))


def test_is_bent_accepts_precomputed_spectrum():
    tt = inner_product_tt(2)
    assert is_bent(tt, spectrum=walsh_spectrum(tt))


# ---------------------------------------------------------------------------
# ANF and degree


def test_mobius_is_involution():
    for seed in range(5):
        bits = random_tt(6, seed).bits
        assert np.array_equal(mobius_transform(mobius_transform(bits)), bits)


def test_anf_pinned_values():
    # f = x0 x1: single quadratic monomial
    tt = TruthTable(2, [0, 0, 0, 1])
    assert list(anf(tt)) == [0, 0, 0, 1]
    assert degree(tt) == 2
    # f = x0
    tt = TruthTable(2, [0, 1, 0, 1])
    assert list(anf(tt)) == [0, 1, 0, 0]
    assert degree(tt) == 1
    # constants
    assert degree(TruthTable(2, [1, 1, 1, 1])) == 0
    assert degree(TruthTable(2, [0, 0, 0, 0])) == 0


def test_anf_against_subset_sum_oracle():
    # coefficient of S is the XOR of f over all x below S in the bit order
    tt = random_tt(4, 7)
    a = anf(tt)
    for s in range(16):
        acc = 0
        for x in range(16):
            if x & ~s == 0:
                acc ^= tt(x)
        assert a[s] == acc


def test_anf_evaluates_back():
    tt = random_tt(5, 3)
    a = anf(tt)
    for x in range(32):
        val = 0
        for s in np.flatnonzero(a):
            if s & ~x == 0:
                val ^= 1
        assert val == tt(x)


def test_inner_product_degree():
    assert degree(inner_product_tt(2)) == 2
    assert degree(inner_product_tt(3)) == 2


# ---------------------------------------------------------------------------
# file format


def test_save_load_roundtrip(tmp_path):
    tt = random_tt(6, 11)
    p = tmp_path / "f.tt"
    save_tt(tt, p)
    assert load_tt(p) == tt


def test_header_written_and_skipped(tmp_path):
    tt = random_tt(3, 0)
    p = tmp_path / "f.tt"
    save_tt(tt, p, header="m=3 family=field params=")
    text = p.read_text()
    assert text.startswith("# m=3 family=field params=\n")
    assert load_tt(p) == tt


def test_bit_packing_is_lsb_first(tmp_path):
    bits = np.zeros(8, dtype=np.uint8)
    bits[0] = 1
    p = tmp_path / "a.tt"
    save_tt(TruthTable(3, bits), p)
    assert p.read_text().splitlines()[-1] == "01"
    bits = np.zeros(8, dtype=np.uint8)
    bits[7] = 1
    save_tt(TruthTable(3, bits), p)
    assert p.read_text().splitlines()[-1] == "80"
    bits = np.zeros(16, dtype=np.uint8)
    bits[9] = 1  # bit 1 of byte 1
    save_tt(TruthTable(4, bits), p)
    assert p.read_text().splitlines()[-1] == "0002"


def test_hex_is_lowercase(tmp_path):
    tt = random_tt(7, 13)
    p = tmp_path / "f.tt"
    save_tt(tt, p)
    payload = p.read_text().strip()
    assert payload == payload.lower()


def test_load_rejects_bad_sizes(tmp_path):
    p = tmp_path / "bad.tt"
    p.write_text("0102ff\n")  # 24 bits
    with pytest.raises(ValueError):
        load_tt(p)
    p.write_text("# only a comment\n")
    with pytest.raises(ValueError):
        load_tt(p)


def test_save_rejects_tiny_tables(tmp_path):
    with pytest.raises(ValueError):
        save_tt(TruthTable(2, [0, 1, 1, 0]), tmp_path / "x.tt")
