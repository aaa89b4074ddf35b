"""Periodic and homoclinic horseshoe orbits.

Periodic orbits are named by the code of their rightmost point in the
unimodal order.  Homoclinic orbits to ``0^inf`` come in three families:

* ``decoration``: ``inf010 w c.10inf`` for a maximal decoration ``w``, where
  ``c`` makes ``w c`` even (``c = 0`` for even ``w``, ``c = 1`` for odd);
* ``plist``: the same code with ``w = c_q1 0 c_q2 0 ... 0 c_qn``;
* ``star``: ``inf0.c_q 0inf``.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

from .nbt import check_rational, nbt_word
from .symbolic import (
    PlanePoint,
    TailSeq,
    check_word,
    primitive_root,
    rotations,
    shift_point,
)

__all__ = [
    "PERIOD_CAP",
    "Family",
    "PeriodicOrbit",
    "HomoclinicOrbit",
    "period_cap",
    "canonical_code",
    "enumerate_periodic",
    "build_homoclinic",
    "decoration",
    "star",
    "plist",
    "parse_generator",
    "orbit_points",
    "WindowedPoints",
    "necklace_count",
    "closing_symbol",
]

PERIOD_CAP = 24
ZERO = TailSeq("", "0")


def period_cap() -> int:
    """Hard cap on enumerated periods; ``HSFORCE_CAP`` may lower it."""
    env = os.environ.get("HSFORCE_CAP")
    if env is None:
        return PERIOD_CAP
    try:
        value = int(env)
    except ValueError:
        raise ValueError(f"HSFORCE_CAP must be an integer, got {env!r}") from None
    return max(1, min(PERIOD_CAP, value))


@dataclass(frozen=True, order=True)
class PeriodicOrbit:
    """A periodic orbit given by its rotation-maximal primitive code."""

    period: int = field(init=False)
    code: str

    def __post_init__(self) -> None:
        object.__setattr__(self, "period", len(self.code))

    def __str__(self) -> str:
        return self.code

    def as_dict(self) -> dict:
        return {"period": self.period, "code": self.code}


def canonical_code(w: str) -> PeriodicOrbit:
    """Rotation of ``w`` whose periodic extension is largest in the unimodal order."""
    check_word(w)
    if not w:
        raise ValueError("a periodic orbit needs a non-empty code")
    root = primitive_root(w)
    if root != w:
        raise ValueError(f"{w} is not primitive; its primitive root is {root}")
    best = max(rotations(w), key=TailSeq.periodic)
    return PeriodicOrbit(best)


def _lyndon_words(n: int):
    """Duval's generator: binary Lyndon words of length <= n in lex order."""
    w = [-1]
    while w:
        w[-1] += 1
        yield w
        m = len(w)
        while len(w) < n:
            w.append(w[len(w) - m])
        while w and w[-1] == 1:
            w.pop()


def necklace_count(n: int) -> int:
    """Number of primitive binary necklaces of length n (Moebius formula)."""

    def mobius(d: int) -> int:
        result, k = 1, 2
        while k * k <= d:
            if d % k == 0:
                d //= k
                if d % k == 0:
                    return 0
                result = -result
            k += 1
        return -result if d > 1 else result

    return sum(mobius(d) * 2 ** (n // d) for d in range(1, n + 1) if n % d == 0) // n


def enumerate_periodic(max_period: int) -> list[PeriodicOrbit]:
    """Every horseshoe periodic orbit of period <= ``max_period``, sorted by (period, code)."""
    cap = period_cap()
    if not 1 <= max_period <= cap:
        raise ValueError(f"max period must lie in 1..{cap}, got {max_period}")
    out = [canonical_code("".join(map(str, w))) for w in _lyndon_words(max_period)]
    out.sort()
    return out


class Family(str, Enum):
    MAXIMAL = "decoration"
    PLIST = "plist"
    STAR = "star"


@dataclass(frozen=True)
class HomoclinicOrbit:
    """Homoclinic orbit to ``0^inf``; ``base`` is the point at the binary point.

    For the decoration families the base is ``inf010 w c.10inf``; for a star
    orbit it is ``inf0.c_q 0inf``.
    """

    family: Family
    decoration: str
    base: PlanePoint
    q: Fraction | None = None
    qs: tuple[Fraction, ...] = ()

    def label(self) -> str:
        if self.family is Family.STAR:
            return f"star:q={self.q}"
        if self.family is Family.PLIST:
            return "plist:" + ",".join(str(q) for q in self.qs)
        return f"maximal:w={self.decoration}"

    def as_dict(self) -> dict:
        if self.family is Family.STAR:
            return {"family": "star", "q": str(self.q)}
        if self.family is Family.PLIST:
            return {"family": "plist", "qs": [str(q) for q in self.qs], "w": self.decoration}
        return {"family": "decoration", "w": self.decoration}


def closing_symbol(w: str) -> str:
    """The symbol ``c`` with ``w c`` even."""
    return "1" if w.count("1") & 1 else "0"


def _decoration_base(w: str) -> PlanePoint:
    # inf010 w c.10inf read backwards from the binary point: c w^ 0 1 0^inf
    return PlanePoint(TailSeq("1", "0"), TailSeq(closing_symbol(w) + w[::-1] + "01", "0"))


def decoration(w: str) -> HomoclinicOrbit:
    check_word(w)
    if not w:
        raise ValueError("the decoration must be non-empty")
    return HomoclinicOrbit(Family.MAXIMAL, w, _decoration_base(w))


def plist(qs) -> HomoclinicOrbit:
    qs = tuple(check_rational(q) for q in qs)
    if not qs:
        raise ValueError("empty rational list")
    if len(set(qs)) != len(qs):
        raise ValueError(f"rationals must be distinct: {', '.join(map(str, qs))}")
    w = "0".join(nbt_word(q) for q in qs)
    return HomoclinicOrbit(Family.PLIST, w, _decoration_base(w), qs=qs)


def star(q) -> HomoclinicOrbit:
    q = check_rational(q)
    c = nbt_word(q)
    return HomoclinicOrbit(Family.STAR, c, PlanePoint(TailSeq(c, "0"), ZERO), q=q)


def build_homoclinic(*, w: str | None = None, q=None, qs=None) -> HomoclinicOrbit:
    """Exactly one of ``w`` (decoration), ``q`` (star) or ``qs`` (rational list)."""
    given = [x is not None for x in (w, q, qs)]
    if sum(given) != 1:
        raise ValueError("give exactly one of w, q, qs")
    if w is not None:
        return decoration(w)
    if q is not None:
        return star(q)
    return plist(qs)


_VARIANT_CHARS = set("01. ")


def parse_generator(text: str) -> HomoclinicOrbit:
    """Parse ``maximal:W``, ``star:M/N`` or ``plist:M/N,M/N,...``.

    ``w=W`` and ``q=M/N`` are accepted as aliases.  A full code with an
    explicit binary point is also accepted when it is the supported variant
    ``inf010 W c.10inf`` with ``W c`` even (written e.g. ``010110.10``).
    """
    text = text.strip()
    kind, sep, arg = text.partition(":")
    if not sep:
        kind, sep, arg = text.partition("=")
    kind = kind.strip().lower()
    if sep and kind in ("maximal", "decoration", "w"):
        return decoration(arg.strip())
    if sep and kind in ("star", "q"):
        return star(arg.strip())
    if sep and kind in ("plist", "list"):
        return plist(a for a in arg.split(",") if a.strip())
    if "." in text and set(text) <= _VARIANT_CHARS:
        return _parse_code(text)
    raise ValueError(f"cannot parse generator {text!r}")


def _parse_code(text: str) -> HomoclinicOrbit:
    # inf01 a W c 10inf; the dot position only picks a point on the orbit
    full = text.replace(" ", "").replace(".", "")
    if not (full.startswith("01") and full.endswith("10") and len(full) >= 7):
        raise ValueError(f"expected a code 01 a W c 10 around one binary point, got {text!r}")
    a, w, c = full[2], full[3:-3], full[-3]
    if a != "0" or c != closing_symbol(w):
        raise ValueError(
            f"unsupported variant {text!r}: only inf010 W c.10inf with W c even is supported"
        )
    return decoration(w)


@dataclass(frozen=True)
class WindowedPoints:
    """Shifts ``-window..window`` of a homoclinic orbit.

    ``certified`` records that every shift outside the window has a
    coordinate equal to ``0^inf``, the unimodal minimum, so such points lie
    in no open rectangle.
    """

    shifts: tuple[int, ...]
    points: tuple[PlanePoint, ...]
    certified: bool


def default_window(o: HomoclinicOrbit) -> int:
    return len(o.decoration) + 8


def _certify(o: HomoclinicOrbit, window: int) -> bool:
    outer_fwd = shift_point(o.base, window + 1)
    outer_bwd = shift_point(o.base, -(window + 1))
    # further shifts keep these coordinates at 0^inf
    return outer_fwd.forward == ZERO and outer_bwd.backward == ZERO


def orbit_points(o: PeriodicOrbit | HomoclinicOrbit, window: int | None = None):
    """Exact plane points of an orbit.

    Periodic orbits return their ``period`` points as a list (``window`` is
    ignored); homoclinic orbits return :class:`WindowedPoints`.
    """
    if isinstance(o, PeriodicOrbit):
        c = o.code
        out = []
        for k in range(o.period):
            r = c[k:] + c[:k]
            out.append(PlanePoint(TailSeq("", r), TailSeq("", r[::-1])))
        return out
    if window is None:
        window = default_window(o)
    if window < 0:
        raise ValueError("window must be non-negative")
    shifts = tuple(range(-window, window + 1))
    points = tuple(shift_point(o.base, k) for k in shifts)
    return WindowedPoints(shifts, points, _certify(o, window))
