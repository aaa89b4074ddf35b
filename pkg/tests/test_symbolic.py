from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hsforce.symbolic import (
    Ordering,
    Parity,
    PlanePoint,
    TailSeq,
    between,
    cmp_unimodal,
    distinguishing_index,
    embed_coordinate,
    is_shift_maximal,
    shift_point,
    word_parity,
    word_reverse,
)
from oracle import cmp_trunc, expand

T = TailSeq.parse
bits = st.text(alphabet="01", max_size=8)
tails = st.builds(TailSeq, bits, st.text(alphabet="01", min_size=1, max_size=8))


@pytest.mark.parametrize(
    "a,b,expected",
    [
        ("1(0)", "11(0)", Ordering.GT),
        ("10(10)", "(10)", Ordering.EQ),
        ("(0)", "(1)", Ordering.LT),
        ("(100110010)", "(10010)", Ordering.GT),
    ],
)
def test_cmp_examples(a, b, expected):
    assert cmp_unimodal(T(a), T(b)) is expected


def test_parity_and_reverse_examples():
    assert word_parity("11") is Parity.EVEN
    assert word_parity("100") is Parity.ODD
    assert word_parity("10011001") is Parity.EVEN
    assert word_reverse("100") == "001"
    assert word_reverse("10011001") == "10011001"
    assert word_reverse("") == ""


@pytest.mark.parametrize("w,ok", [("1", True), ("01", False), ("1011", True), ("10", True)])
def test_shift_maximal_examples(w, ok):
    assert is_shift_maximal(w) is ok


def test_shift_maximal_rejects_empty():
    with pytest.raises(ValueError):
        is_shift_maximal("")


def test_shift_point_examples():
    p = PlanePoint.parse("1(0)", "(0)")
    assert shift_point(p, 1) == PlanePoint.parse("(0)", "1(0)")
    assert shift_point(p, 0) == p
    q = PlanePoint.parse("(10)", "(01)")
    assert shift_point(q, 2) == q


def test_embed_examples():
    assert embed_coordinate(T("(0)"), 8) == 0
    assert embed_coordinate(T("1(0)"), 8) == Fraction(255, 256)
    assert embed_coordinate(T("(10)"), 8) == Fraction(204, 256)


def test_parse_and_print():
    assert str(T("0110010(0)")) == "011001(0)"
    assert str(T("0(10)")) == "(01)"
    with pytest.raises(ValueError):
        T("01")
    with pytest.raises(ValueError):
        TailSeq("2", "0")
    with pytest.raises(ValueError):
        TailSeq("1", "")


def test_between_gap():
    # w01 0^inf and w11 0^inf (w even) are adjacent
    assert between(T("01(0)"), T("11(0)")) is None
    assert between(T("1101(0)"), T("1111(0)")) is None
    assert between(T("01(0)"), T("1(0)")) == T("11(0)")
    lo, hi = T("(0)"), T("1(0)")
    c = between(lo, hi)
    assert c is not None and lo < c < hi


@given(tails, tails)
def test_cmp_agrees_with_truncation(a, b):
    o = cmp_unimodal(a, b)
    t = cmp_trunc(expand(a.pre, a.per), expand(b.pre, b.per))
    assert int(o) == t


@given(tails, tails)
def test_antisymmetry_and_eq(a, b):
    assert cmp_unimodal(a, b) == -cmp_unimodal(b, a)
    assert (cmp_unimodal(a, b) is Ordering.EQ) == (a == b)


@given(tails, tails, tails)
def test_transitivity(a, b, c):
    if a <= b and b <= c:
        assert a <= c


@given(bits, st.text(alphabet="01", min_size=1, max_size=8))
def test_canonical_idempotent(u, v):
    x = TailSeq(u, v)
    assert TailSeq(x.pre, x.per) == x
    assert TailSeq(u, v) == TailSeq(u + v, v)
    assert TailSeq.parse(str(x)) == x


@settings(max_examples=300)
@given(tails, tails)
def test_monotone_embedding(a, b):
    if a == b:
        return
    d = distinguishing_index(a, b)
    depth = d + 1
    assert (embed_coordinate(a, depth) < embed_coordinate(b, depth)) == (a < b)


@given(bits, bits)
def test_reverse_involution_and_parity_additive(u, v):
    assert word_reverse(word_reverse(u)) == u
    assert word_parity(u + v) == word_parity(u) ^ word_parity(v)


@given(tails)
def test_fold_is_maximum(s):
    assert cmp_unimodal(s, T("1(0)")) is not Ordering.GT


@given(tails, tails)
def test_between_is_strict(a, b):
    lo, hi = sorted((a, b))
    c = between(lo, hi)
    if c is not None:
        assert lo < c < hi


@given(tails, tails, st.integers(-12, 12))
def test_shift_inverse(f, b, k):
    p = PlanePoint(f, b)
    assert shift_point(shift_point(p, k), -k) == p
