"""Forced orbit sets and pairwise forcing from pruning regions.

An orbit survives the pruning of a region when none of its points lies in
the open rectangles; the survivors of a generator's region are exactly the
orbits it forces.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Sequence

from .nbt import check_rational
from .orbits import (
    Family,
    HomoclinicOrbit,
    PeriodicOrbit,
    enumerate_periodic,
    orbit_points,
)
from .regions import (
    PruningRegion,
    limiting_structure,
    region_contains,
    region_maximal,
    region_plist,
    region_star,
)
from .symbolic import PlanePoint, TailSeq, is_shift_maximal, word_parity

__all__ = [
    "Mode",
    "Verdict",
    "ForcingReport",
    "Avoidance",
    "region_of",
    "orbit_avoids",
    "forced_periodic",
    "forces_pair",
    "sufficient_order_check",
]


@dataclass(frozen=True)
class Avoidance:
    avoids: bool
    witness: PlanePoint | None = None
    rect_index: int | None = None

    def __bool__(self) -> bool:
        return self.avoids


def region_of(g: HomoclinicOrbit) -> PruningRegion:
    if g.family is Family.STAR:
        return region_star(g.q)
    if g.family is Family.PLIST:
        return region_plist(g.qs)
    if g.family is Family.MAXIMAL:
        if not is_shift_maximal(g.decoration):
            raise ValueError(
                f"decoration {g.decoration} is not maximal; its pruning region is not known"
            )
        return region_maximal(g.decoration)
    raise ValueError(f"unsupported family {g.family!r}")


def orbit_avoids(region: PruningRegion, o: PeriodicOrbit | HomoclinicOrbit) -> Avoidance:
    if isinstance(o, PeriodicOrbit):
        points = orbit_points(o)
    else:
        wp = orbit_points(o)
        if not wp.certified:  # pragma: no cover - the default window always certifies
            raise RuntimeError(f"window too small to certify {o.label()}")
        points = wp.points
    for p in points:
        i = region_contains(region, p)
        if i is not None:
            return Avoidance(False, p, i)
    return Avoidance(True)


@dataclass(frozen=True)
class ForcingReport:
    region: PruningRegion
    max_period: int
    forced: tuple[PeriodicOrbit, ...]
    excluded: tuple[tuple[PeriodicOrbit, PlanePoint, int], ...]
    generator: HomoclinicOrbit | None = None

    def forced_codes(self) -> set[str]:
        return {o.code for o in self.forced}

    def as_dict(self) -> dict:
        return {
            "generator": self.generator.as_dict() if self.generator else None,
            "region": self.region.as_list(),
            "maxPeriod": self.max_period,
            "forced": [o.as_dict() for o in self.forced],
            "excluded": [
                {**o.as_dict(), "witness": w.as_dict(), "rect_index": i}
                for o, w, i in self.excluded
            ],
        }


def forced_periodic(
    region: PruningRegion | HomoclinicOrbit, max_period: int
) -> ForcingReport:
    """Split all periodic orbits of period <= ``max_period`` into survivors and
    excluded orbits, each exclusion with its witness point."""
    generator = None
    if isinstance(region, HomoclinicOrbit):
        generator, region = region, region_of(region)
    forced, excluded = [], []
    for o in enumerate_periodic(max_period):
        a = orbit_avoids(region, o)
        if a:
            forced.append(o)
        else:
            excluded.append((o, a.witness, a.rect_index))
    return ForcingReport(region, max_period, tuple(forced), tuple(excluded), generator)


def forces_pair(a: HomoclinicOrbit, b: PeriodicOrbit | HomoclinicOrbit) -> Avoidance:
    """Whether ``a`` forces ``b``: the orbit of ``b`` misses the region of ``a``.

    A false result means the orbit meets the region (see the witness); it is
    not a proof of non-forcing.
    """
    return orbit_avoids(region_of(a), b)


class Mode(str, Enum):
    MAXIMAL_PAIR = "maximal"
    STAR_PAIR = "star"
    PLIST_COMBINATORICS = "plist"


class Verdict(str, Enum):
    FORCES = "forces"
    UNKNOWN = "unknown"


def _decoration_tail(w: str) -> TailSeq:
    # x_min of the decoration's own region
    return TailSeq(w + ("01" if word_parity(w) == 0 else "11"), "0")


def _same_combinatorics(a: Sequence[Fraction], b: Sequence[Fraction]) -> bool:
    n = len(a)
    return all((a[i] < a[j]) == (b[i] < b[j]) for i in range(n) for j in range(n))


def sufficient_order_check(mode: Mode | str, lhs, rhs) -> Verdict:
    """Order conditions that are sufficient for forcing.

    * maximal pair ``w, w'``: ``w >= w'`` and ``w^ >= w'^`` (reversals), each
      word completed by its stable tail ``010^inf`` (even) or ``110^inf`` (odd);
    * star pair ``q, q'``: ``q >= q'``;
    * P-lists ``qs, qs'``: same combinatorics and ``q_i < q'_i`` for all i.
    """
    mode = Mode(mode)
    if mode is Mode.MAXIMAL_PAIR:
        w, w2 = str(lhs), str(rhs)
        if not (w and w2 and is_shift_maximal(w) and is_shift_maximal(w2)):
            raise ValueError("maximal mode needs two maximal decorations")
        ok = _decoration_tail(w) >= _decoration_tail(w2) and _decoration_tail(
            w[::-1]
        ) >= _decoration_tail(w2[::-1])
        return Verdict.FORCES if ok else Verdict.UNKNOWN
    if mode is Mode.STAR_PAIR:
        q, q2 = check_rational(lhs), check_rational(rhs)
        return Verdict.FORCES if q >= q2 else Verdict.UNKNOWN
    qs = [check_rational(q) for q in lhs]
    qs2 = [check_rational(q) for q in rhs]
    if len(qs) != len(qs2):
        raise ValueError("P-lists of different lengths")
    for L in (qs, qs2):
        if not limiting_structure(L).is_plist:
            raise ValueError(f"{', '.join(map(str, L))} is not a P-list")
    ok = _same_combinatorics(qs, qs2) and all(a < b for a, b in zip(qs, qs2))
    return Verdict.FORCES if ok else Verdict.UNKNOWN

