"""Open rectangles of the symbol plane and the family pruning regions.

A rectangle is ``{x_min < x < x_max, y_min < y < y_max}`` with ``x`` the
forward tail and ``y`` the backward tail of a point, both ordered by the
unimodal order.  Every family rectangle uses ``x_max = 10^inf`` (the fold)
and two y-levels of one unstable manifold that differ only in the first
backward symbol.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .nbt import check_rational, nbt_word
from .symbolic import (
    Ordering,
    PlanePoint,
    TailSeq,
    check_word,
    cmp_unimodal,
    is_shift_maximal,
    rotations,
    word_parity,
)

__all__ = [
    "FOLD",
    "Rectangle",
    "PruningRegion",
    "PList",
    "NotAPList",
    "rect_contains",
    "region_contains",
    "region_maximal",
    "region_star",
    "region_unshrunk_maximal",
    "limiting_structure",
    "region_plist",
    "plist_domains",
    "PListDomain",
    "fold_levels",
]

FOLD = TailSeq("1", "0")  # 10^inf, the unimodal maximum
TOP_LEFT = TailSeq("01", "0")  # 010^inf, the largest sequence starting with 0


@dataclass(frozen=True)
class Rectangle:
    x_min: TailSeq
    x_max: TailSeq
    y_min: TailSeq
    y_max: TailSeq
    provenance: str = ""

    def __post_init__(self) -> None:
        if not self.x_min < self.x_max:
            raise ValueError(f"x_min {self.x_min} is not below x_max {self.x_max}")
        if not self.y_min < self.y_max:
            raise ValueError(f"y_min {self.y_min} is not below y_max {self.y_max}")

    def as_dict(self) -> dict[str, str]:
        return {
            "x_min": str(self.x_min),
            "x_max": str(self.x_max),
            "y_min": str(self.y_min),
            "y_max": str(self.y_max),
            "provenance": self.provenance,
        }

    @classmethod
    def from_dict(cls, d: dict) -> Rectangle:
        return cls(
            TailSeq.parse(d["x_min"]),
            TailSeq.parse(d["x_max"]),
            TailSeq.parse(d["y_min"]),
            TailSeq.parse(d["y_max"]),
            d.get("provenance", ""),
        )


@dataclass(frozen=True)
class PruningRegion:
    rectangles: tuple[Rectangle, ...]

    def __post_init__(self) -> None:
        if not self.rectangles:
            raise ValueError("a pruning region needs at least one rectangle")

    def __iter__(self):
        return iter(self.rectangles)

    def __len__(self) -> int:
        return len(self.rectangles)

    def __getitem__(self, i: int) -> Rectangle:
        return self.rectangles[i]

    def as_list(self) -> list[dict[str, str]]:
        return [r.as_dict() for r in self.rectangles]


def rect_contains(r: Rectangle, p: PlanePoint) -> bool:
    """Strict membership in the open rectangle."""
    return r.x_min < p.forward < r.x_max and r.y_min < p.backward < r.y_max


def region_contains(region: PruningRegion, p: PlanePoint) -> int | None:
    """Index of the first rectangle containing ``p``, else None."""
    for i, r in enumerate(region):
        if rect_contains(r, p):
            return i
    return None


def fold_levels(tail: TailSeq, provenance: str, x_min: TailSeq) -> Rectangle:
    """Rectangle right of ``x_min`` between the two y-levels ``0 tail`` and ``1 tail``."""
    a, b = tail.prepend("0"), tail.prepend("1")
    lo, hi = (a, b) if a < b else (b, a)
    return Rectangle(x_min, FOLD, lo, hi, provenance)


def region_maximal(w: str) -> PruningRegion:
    """Pruning region of the homoclinic orbit ``inf010 w c.10inf`` for maximal ``w``,
    where ``c`` is 0 for even ``w`` and 1 for odd ``w``.

    Even ``w``: stable side through ``w010^inf``, unstable side on ``(w1)^inf``.
    Odd ``w``: stable side through ``w110^inf``, unstable side on ``(w0)^inf``.
    """
    check_word(w)
    if not w:
        raise ValueError("the decoration must be non-empty")
    if not is_shift_maximal(w):
        top = TailSeq.periodic(w)
        for i, r in enumerate(rotations(w)[1:], start=1):
            if TailSeq.periodic(r) > top:
                raise ValueError(
                    f"{w} is not maximal: shift {i} gives ({r})^inf above ({w})^inf"
                )
    if word_parity(w) == 0:
        x_min, close = TailSeq(w + "01", "0"), "1"
    else:
        x_min, close = TailSeq(w + "11", "0"), "0"
    # unstable anchor (w close)^inf: backward levels (close w^)^inf and its fold partner
    wh = w[::-1]
    tail = TailSeq("", wh + close)
    rect = fold_levels(tail, f"maximal:w={w}", x_min)
    return PruningRegion((rect,))


def region_unshrunk_maximal(w: str) -> PruningRegion:
    """The maximal domain before shrinking, for even maximal ``w``.

    Stable side through ``w010^inf``; unstable side through the homoclinic
    point ``inf010 w 0.10inf`` itself, whose backward tail is ``0 w^ 0 1 0^inf``.
    This is generally not a pruning domain.
    """
    if not w or not is_shift_maximal(w):
        raise ValueError(f"{w!r} is not a maximal decoration")
    if word_parity(w) != 0:
        raise ValueError("the unshrunk domain is defined here for even decorations only")
    tail = TailSeq(w[::-1] + "01", "0")
    rect = fold_levels(tail, f"unshrunk:w={w}", TailSeq(w + "01", "0"))
    return PruningRegion((rect,))


def region_star(q) -> PruningRegion:
    """Domain of ``inf0.c_q 0inf``: stable side through ``sigma^2(c_q 0^inf)``,
    unstable side on the fixed point ``1^inf``."""
    q = check_rational(q)
    c = nbt_word(q)
    x_min = TailSeq(c[2:], "0")
    rect = fold_levels(TailSeq("", "1"), f"star:q={q}", x_min)
    return PruningRegion((rect,))


class NotAPList(ValueError):
    pass


@dataclass(frozen=True)
class PList:
    """Limiting-point structure of a rational list (1-based indices).

    ``points[i - 1]`` is ``C_i = (X_i, Y_i)`` for ``i = 1..n + 1``; the last
    one is the sentinel ``(10^inf, 0 c_qn ...)``.  ``successor`` maps each
    limiting index to its successor; ``n + 1`` is the sentinel.
    """

    qs: tuple[Fraction, ...]
    codes: tuple[str, ...]
    points: tuple[tuple[TailSeq, TailSeq], ...]
    limiting: frozenset[int]
    successor: dict[int, int]
    is_plist: bool
    violation: str | None = None

    @property
    def n(self) -> int:
        return len(self.qs)

    def chain(self) -> list[int]:
        """Limiting indices reached from 1 by following successors (sentinel excluded)."""
        out, i = [], 1
        while i <= self.n:
            out.append(i)
            i = self.successor[i]
        return out

    def as_dict(self) -> dict:
        return {
            "qs": [str(q) for q in self.qs],
            "codes": list(self.codes),
            "limiting": sorted(self.limiting),
            "successor": {str(k): v for k, v in sorted(self.successor.items())},
            "is_plist": self.is_plist,
            "violation": self.violation,
        }


def _context_points(codes: tuple[str, ...]) -> list[tuple[TailSeq, TailSeq]]:
    # C_i read on the homoclinic orbit itself: X_i is the forward tail of
    # S_i = inf010 c1 0 ... 0 c_{i-1} 0 . c_i 0 ... 0 c_n 010^inf and Y_i its backward tail.
    n = len(codes)
    pts = []
    for i in range(n + 1):
        fwd = "0".join(codes[i:])
        x = TailSeq(fwd + "01", "0") if fwd else FOLD
        back = "".join("0" + codes[k][::-1] for k in range(i - 1, -1, -1))
        y = TailSeq(back + "01", "0")
        pts.append((x, y))
    return pts


def _periodic_points(codes: tuple[str, ...]) -> list[tuple[TailSeq, TailSeq]]:
    # secondary completion: X_i = (c_i 0)^inf, Y_i = (0 c_{i-1})^inf, with c_0 = c_{n+1} = 10^inf
    n = len(codes)
    pts = []
    for i in range(n + 1):
        x = TailSeq("", codes[i] + "0") if i < n else FOLD
        y = TailSeq("", "0" + codes[i - 1][::-1]) if i > 0 else TOP_LEFT
        pts.append((x, y))
    return pts


def limiting_structure(qs, completion: str = "context") -> PList:
    """Limiting points, successors and the P-list verdict of ``qs``.

    ``C_i`` is limiting when some ``C_j`` with ``i < j <= n + 1`` has
    ``X_i <= X_j`` and ``Y_j < Y_i`` and no other ``C_k`` lies in
    ``{X_i < x < 10^inf, Y_j < y}``; that ``j`` is unique and is the successor.
    ``completion`` picks how the finite codes are read as sequences:
    ``"context"`` (along the orbit) or ``"periodic"`` (``(c 0)^inf``).
    """
    qs = tuple(check_rational(q) for q in qs)
    if not qs:
        raise ValueError("empty rational list")
    if len(set(qs)) != len(qs):
        raise ValueError("rationals must be pairwise distinct")
    codes = tuple(nbt_word(q) for q in qs)
    if completion == "context":
        pts = _context_points(codes)
    elif completion == "periodic":
        pts = _periodic_points(codes)
    else:
        raise ValueError(f"unknown completion {completion!r}")
    n = len(qs)

    def inside(k: int, x_lo: TailSeq, y_lo: TailSeq) -> bool:
        x, y = pts[k]
        return x_lo < x < FOLD and y_lo < y

    successor: dict[int, int] = {}
    for i in range(n):
        xi, yi = pts[i]
        for j in range(i + 1, n + 1):
            xj, yj = pts[j]
            if cmp_unimodal(xi, xj) is Ordering.GT or not yj < yi:
                continue
            if not any(inside(k, xi, yj) for k in range(n + 1) if k not in (i, j)):
                successor[i + 1] = j + 1
                break
    limiting = frozenset(successor)

    violation = None
    for i in sorted(limiting):
        j = successor[i]
        between_ = [k for k in range(i + 1, j) if k in limiting]
        if between_:
            violation = (
                f"C{between_[0]} is a limiting point between C{i} and its successor C{j}"
            )
            break
    return PList(qs, codes, tuple(pts), limiting, successor, violation is None, violation)


@dataclass(frozen=True)
class PListDomain:
    """Domain of limiting point ``C_i`` with successor ``C_j``."""

    i: int
    j: int
    block: str  # u = c_qi 0 ... 0 c_q(j-1)
    stable_anchor: PlanePoint  # S_i
    unstable_anchor: TailSeq  # T = (u 1)^inf
    rectangle: Rectangle


def plist_domains(qs) -> list[PListDomain]:
    pl = limiting_structure(qs)
    if not pl.is_plist:
        raise NotAPList(f"not a P-list: {pl.violation}")
    out = []
    for i in sorted(pl.limiting):
        j = pl.successor[i]
        u = "0".join(pl.codes[i - 1 : j - 1])
        x_min, y = pl.points[i - 1]
        label = f"plist:C{i}->C{j}" if j <= pl.n else f"plist:C{i}->sentinel"
        rect = fold_levels(TailSeq("", u[::-1] + "1"), label, x_min)
        out.append(PListDomain(i, j, u, PlanePoint(x_min, y), TailSeq("", u + "1"), rect))
    return out


def region_plist(qs) -> PruningRegion:
    """One rectangle per limiting point ``C_i`` with successor ``C_j``.

    With ``u = c_qi 0 ... 0 c_q(j-1)``: stable side through
    ``c_qi 0 ... 0 c_qn 010^inf``, unstable side on ``(u 1)^inf``.
    """
    return PruningRegion(tuple(d.rectangle for d in plist_domains(qs)))
