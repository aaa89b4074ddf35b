"""Binary words, eventually periodic sequences and the unimodal order.

Words are plain strings over ``"01"``. One-sided eventually periodic
sequences are :class:`TailSeq` values written ``pre(per)``, e.g. ``01(10)``.
A point of the symbol plane is a :class:`PlanePoint` holding the forward
tail ``s0 s1 ...`` and the backward tail ``s-1 s-2 ...``, both read away
from the binary point.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from enum import IntEnum
from fractions import Fraction
from functools import total_ordering
from math import lcm

__all__ = [
    "Ordering",
    "Parity",
    "TailSeq",
    "PlanePoint",
    "check_word",
    "cmp_unimodal",
    "word_parity",
    "word_reverse",
    "is_primitive",
    "primitive_root",
    "rotations",
    "is_shift_maximal",
    "shift_point",
    "embed_coordinate",
    "between",
    "distinguishing_index",
]

_WORD_RE = re.compile(r"[01]*")
_TAIL_RE = re.compile(r"([01]*)\(([01]+)\)")


class Ordering(IntEnum):
    LT = -1
    EQ = 0
    GT = 1


class Parity(IntEnum):
    EVEN = 0
    ODD = 1


def check_word(w: str) -> str:
    if not isinstance(w, str) or not _WORD_RE.fullmatch(w):
        raise ValueError(f"not a binary word: {w!r}")
    return w


def word_parity(w: str) -> Parity:
    return Parity(check_word(w).count("1") & 1)


def word_reverse(w: str) -> str:
    return check_word(w)[::-1]


def primitive_root(w: str) -> str:
    """Shortest ``r`` with ``w == r * k``."""
    n = len(w)
    if n == 0:
        raise ValueError("empty word has no primitive root")
    # the smallest rotation offset at which w matches itself is its root length
    i = (w + w).find(w, 1)
    if n % i == 0:
        return w[:i]
    return w


def is_primitive(w: str) -> bool:
    return len(primitive_root(w)) == len(w)


def rotations(w: str) -> list[str]:
    return [w[i:] + w[:i] for i in range(len(w))]


@total_ordering
@dataclass(frozen=True)
class TailSeq:
    """Eventually periodic sequence ``pre per per per ...`` in canonical form.

    The period is primitive and the preperiod minimal, so two values are
    equal iff they denote the same infinite sequence.  Python comparison
    operators follow the unimodal order.
    """

    pre: str
    per: str

    def __post_init__(self) -> None:
        pre, per = check_word(self.pre), check_word(self.per)
        if not per:
            raise ValueError("period must be non-empty")
        per = primitive_root(per)
        while pre and pre[-1] == per[-1]:
            pre, per = pre[:-1], per[-1] + per[:-1]
        object.__setattr__(self, "pre", pre)
        object.__setattr__(self, "per", per)

    @classmethod
    def parse(cls, text: str) -> TailSeq:
        m = _TAIL_RE.fullmatch(text.strip())
        if m is None:
            raise ValueError(f"bad sequence {text!r}; expected pre(per), e.g. 01(10)")
        return cls(m.group(1), m.group(2))

    @classmethod
    def periodic(cls, w: str) -> TailSeq:
        return cls("", w)

    def __str__(self) -> str:
        return f"{self.pre}({self.per})"

    def __repr__(self) -> str:
        return f"TailSeq('{self}')"

    def __len__(self) -> int:
        # description size, not sequence length
        return len(self.pre) + len(self.per)

    def __getitem__(self, i: int) -> str:
        if i < 0:
            raise IndexError(i)
        if i < len(self.pre):
            return self.pre[i]
        return self.per[(i - len(self.pre)) % len(self.per)]

    def prefix(self, n: int) -> str:
        """The first ``n`` symbols."""
        if n <= len(self.pre):
            return self.pre[:n]
        k = n - len(self.pre)
        reps = -(-k // len(self.per))
        return self.pre + (self.per * reps)[:k]

    def drop(self, n: int) -> TailSeq:
        """``sigma^n`` on one-sided sequences."""
        if n <= len(self.pre):
            return TailSeq(self.pre[n:], self.per)
        k = (n - len(self.pre)) % len(self.per)
        return TailSeq("", self.per[k:] + self.per[:k])

    def prepend(self, w: str) -> TailSeq:
        return TailSeq(w + self.pre, self.per)

    def __lt__(self, other: TailSeq) -> bool:
        if not isinstance(other, TailSeq):
            return NotImplemented
        return cmp_unimodal(self, other) is Ordering.LT


def _compare_bound(a: TailSeq, b: TailSeq) -> int:
    # Past max(|pre_a|, |pre_b|) both sequences are purely periodic, so if
    # they agree on a further lcm(|per_a|, |per_b|) symbols they agree forever.
    return max(len(a.pre), len(b.pre)) + lcm(len(a.per), len(b.per))


def _decide(k: int, s: str, t: str) -> Ordering:
    odd = s.count("1", 0, k) & 1
    bigger = s[k] > t[k]
    return Ordering.GT if bigger != bool(odd) else Ordering.LT


def _first_difference(s: str, t: str) -> int:
    for k, (x, y) in enumerate(zip(s, t)):
        if x != y:
            return k
    return -1


def cmp_unimodal(a: TailSeq, b: TailSeq) -> Ordering:
    """Compare two sequences in the unimodal order.

    At the first differing index the larger symbol wins when the common
    prefix holds an even number of ones, the smaller when it is odd.
    """
    if a == b:
        return Ordering.EQ
    n = _compare_bound(a, b)
    s, t = a.prefix(n), b.prefix(n)
    k = _first_difference(s, t)
    if k < 0:  # pragma: no cover - canonical forms make this unreachable
        raise AssertionError(f"{a} and {b} agree on {n} symbols but differ")
    return _decide(k, s, t)


def distinguishing_index(a: TailSeq, b: TailSeq) -> int:
    """First index where ``a`` and ``b`` differ, or -1 if equal."""
    if a == b:
        return -1
    n = _compare_bound(a, b)
    return _first_difference(a.prefix(n), b.prefix(n))


def is_shift_maximal(w: str) -> bool:
    """True iff every rotation ``r`` of ``w`` satisfies ``r^inf <= w^inf``."""
    if not check_word(w):
        raise ValueError("is_shift_maximal needs a non-empty word")
    top = TailSeq.periodic(w)
    return all(TailSeq.periodic(r) <= top for r in rotations(w)[1:])


@dataclass(frozen=True)
class PlanePoint:
    """Bi-infinite sequence ``... s-2 s-1 . s0 s1 ...``."""

    forward: TailSeq
    backward: TailSeq

    @classmethod
    def parse(cls, forward: str, backward: str) -> PlanePoint:
        return cls(TailSeq.parse(forward), TailSeq.parse(backward))

    def __str__(self) -> str:
        return f"{self.forward} | {self.backward}"

    def as_dict(self) -> dict[str, str]:
        return {"forward": str(self.forward), "backward": str(self.backward)}


def shift_point(p: PlanePoint, k: int) -> PlanePoint:
    """Apply ``sigma^k``; positive ``k`` moves the binary point right."""
    fwd, bwd = p.forward, p.backward
    if k >= 0:
        head = fwd.prefix(k)
        return PlanePoint(fwd.drop(k), bwd.prepend(head[::-1]))
    head = bwd.prefix(-k)
    return PlanePoint(fwd.prepend(head[::-1]), bwd.drop(-k))


def embed_coordinate(s: TailSeq, depth: int) -> Fraction:
    """Dyadic plotting coordinate of ``s`` in [0, 1].

    Bit ``i`` is the parity of ``s0 ... si``, which turns the unimodal
    order into the usual order on binary expansions.
    """
    if depth < 1:
        raise ValueError("depth must be positive")
    acc, parity = 0, 0
    for c in s.prefix(depth):
        parity ^= c == "1"
        acc = 2 * acc + parity
    return Fraction(acc, 2**depth)


def _raise_at(s: TailSeq, start: int, up: bool) -> TailSeq | None:
    """A sequence sharing ``s[:start]`` that is strictly above (``up``) or
    below ``s``, obtained by flipping one symbol; None if none exists."""
    # Positions past the preperiod repeat with period |per| and the parity
    # of the prefix alternates at worst every period, so two periods suffice.
    limit = max(start, len(s.pre)) + 2 * len(s.per)
    head = s.prefix(limit)
    odd = head.count("1", 0, start) & 1
    for i in range(start, limit):
        c = head[i]
        # flipping s_i gives a bigger sequence iff (even prefix and 0) or (odd and 1)
        if ((c == "0") if up else (c == "1")) != bool(odd):
            flipped = "1" if c == "0" else "0"
            return TailSeq(head[:i] + flipped, "0")
        odd ^= c == "1"
    return None


def between(lo: TailSeq, hi: TailSeq) -> TailSeq | None:
    """Some sequence strictly between ``lo`` and ``hi``, or None.

    The unimodal order has gaps (``w01 0^inf`` and ``w11 0^inf`` with ``w``
    even are adjacent), so None is a real answer.
    """
    if not lo < hi:
        return None
    k = distinguishing_index(lo, hi)
    for cand in (_raise_at(lo, k + 1, up=True), _raise_at(hi, k + 1, up=False)):
        if cand is not None and lo < cand < hi:
            return cand
    return None
