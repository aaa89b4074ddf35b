"""NBT codes ``c_q`` for rationals ``q`` in (0, 1/2)."""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

__all__ = ["NbtCode", "parse_rational", "check_rational", "nbt_code", "nbt_word", "is_nbt_shape"]

_FRACTION_RE = re.compile(r"\s*(\d+)\s*/\s*(\d+)\s*")
_SHAPE_RE = re.compile(r"10+(?:110*)*1")

HALF = Fraction(1, 2)


def parse_rational(text: str) -> Fraction:
    """Parse ``m/n`` and check the range; fractions are reduced first."""
    m = _FRACTION_RE.fullmatch(text)
    if m is None:
        raise ValueError(f"bad rational {text!r}; expected m/n")
    num, den = int(m.group(1)), int(m.group(2))
    if den == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return check_rational(Fraction(num, den))


def check_rational(q: Fraction | str) -> Fraction:
    if isinstance(q, str):
        return parse_rational(q)
    q = Fraction(q)
    if not 0 < q < HALF:
        raise ValueError(f"{q} is outside (0, 1/2)")
    return q


def is_nbt_shape(w: str) -> bool:
    """``1 0^a1 11 0^a2 11 ... 11 0^am 1`` with ``a1 >= 1``.

    Inner blocks may be empty once ``n / m < 3`` (``c_5/12 = 1011110111101``).
    """
    return _SHAPE_RE.fullmatch(w) is not None


@dataclass(frozen=True)
class NbtCode:
    q: Fraction
    word: str

    def __post_init__(self) -> None:
        m, n = self.q.numerator, self.q.denominator
        w = self.word
        if len(w) != n + 1:
            raise ValueError(f"c_{self.q} must have length {n + 1}, got {len(w)}")
        if w != w[::-1]:
            raise ValueError(f"c_{self.q} = {w} is not a palindrome")
        if w.count("1") != 2 * m:
            raise ValueError(f"c_{self.q} = {w} must hold {2 * m} ones")
        if not is_nbt_shape(w):
            raise ValueError(f"c_{self.q} = {w} has the wrong block shape")

    def as_dict(self) -> dict[str, str]:
        return {"q": str(self.q), "code": self.word}


@lru_cache(maxsize=4096)
def nbt_word(q: Fraction) -> str:
    """The word ``s0 ... sn`` of ``q = m/n``.

    ``si = 1`` iff the segment from (0, 0) to (n, m) crosses an integer
    height ``y = k`` at some ``x = k n / m`` with ``i - 1 < x < i + 1``.
    Everything is integer arithmetic: ``m (i - 1) < k n < m (i + 1)``.
    """
    q = check_rational(q)
    m, n = q.numerator, q.denominator
    s = ["0"] * (n + 1)
    for k in range(m + 1):
        kn = k * n
        # the window (i-1, i+1) around a crossing x = kn/m holds i = floor(x) and ceil(x)
        lo, hi = kn // m, -(-kn // m)
        for i in {lo, hi}:
            if i <= n and m * (i - 1) < kn < m * (i + 1):
                # crossings are n/m > 2 apart, so one window never sees two of them
                assert s[i] == "0", f"two crossings in the window of s{i} for {q}"
                s[i] = "1"
    return "".join(s)


def nbt_code(q: Fraction | str) -> NbtCode:
    q = check_rational(q)
    return NbtCode(q, nbt_word(q))
