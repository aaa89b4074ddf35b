from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hsforce.nbt import NbtCode, is_nbt_shape, nbt_code, parse_rational
from hsforce.symbolic import Ordering, TailSeq, cmp_unimodal


def farey(max_den):
    return sorted({Fraction(m, n) for n in range(3, max_den + 1) for m in range(1, n) if 2 * m < n})


@pytest.mark.parametrize("q,w", [("2/7", "10011001"), ("1/3", "1001"), ("2/5", "101101"), ("1/4", "10001")])
def test_goldens(q, w):
    assert nbt_code(q).word == w


def test_reduction_and_errors():
    assert nbt_code("4/14").word == "10011001"
    assert parse_rational("6/21") == Fraction(2, 7)
    for bad in ("1/2", "3/4", "0/5", "1/0", "x", "-1/3"):
        with pytest.raises(ValueError):
            nbt_code(bad)


def test_code_type_validates():
    with pytest.raises(ValueError):
        NbtCode(Fraction(1, 3), "1010")


@given(st.integers(3, 200).flatmap(lambda n: st.tuples(st.integers(1, (n - 1) // 2), st.just(n))))
def test_invariants_random(mn):
    m, n = mn
    q = Fraction(m, n)
    w = nbt_code(q).word
    m, n = q.numerator, q.denominator
    assert len(w) == n + 1 and w == w[::-1] and w.count("1") == 2 * m and is_nbt_shape(w)


def _gaps(w):
    return [len(b) for b in w[1:-1].split("11")]


@pytest.mark.parametrize("q", farey(60))
def test_block_lengths(q):
    # interior zero blocks come in the two lengths floor(n/m)-2, ceil(n/m)-2
    m, n = q.numerator, q.denominator
    w = nbt_code(q).word
    gaps = _gaps(w)
    assert len(gaps) == m
    lo, hi = n // m - 2, -(-n // m) - 2
    assert all(lo <= g <= hi for g in gaps[1:-1])
    assert gaps[0] == gaps[-1] >= 1
    if 3 * m <= n:
        assert min(gaps) >= 1


def test_adjacent_pairs_when_n_over_m_below_three():
    assert nbt_code("5/12").word == "1011110111101"


def test_codes_reverse_rational_order():
    qs = farey(12)
    for a, b in zip(qs, qs[1:]):
        x = TailSeq("", nbt_code(a).word + "0")
        y = TailSeq("", nbt_code(b).word + "0")
        assert cmp_unimodal(x, y) is Ordering.GT
