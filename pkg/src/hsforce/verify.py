"""Exact check that a rectangle is a pruning domain.

The stable side is the left edge ``{x_min} x [y_min, y_max]`` and the
unstable side the two horizontal edges ``[x_min, x_max] x {y_min}`` and
``[x_min, x_max] x {y_max}``.  The n-th forward image of the stable edge is
the vertical segment at ``sigma^n(x_min)`` whose y-range is the old one with
the reversed word ``x_min[:n]`` prepended; backward images of the horizontal
edges are symmetric.  A rectangle is a pruning domain when no image ever
meets its interior.

Comparing ``a_{n-1} ... a_0 t`` against a fixed eventually periodic ``z``
only needs ``a_{n-1}``, ``z_0`` and the outcome of ``a_{n-2} ... a_0 t``
against ``sigma(z)``.  Tracking those outcomes for every shift of every
bound turns the iteration into a finite automaton driven by the eventually
periodic sequence ``a``; once an automaton state repeats, the outcomes
repeat forever, which makes the check a decision procedure.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from enum import Enum

from .regions import PruningRegion, Rectangle, region_contains
from .symbolic import Ordering, PlanePoint, TailSeq, between, cmp_unimodal, shift_point

__all__ = ["Side", "Status", "Verdict", "verify_pruning_domain", "DEFAULT_BOUND"]

DEFAULT_BOUND = 256


class Side(str, Enum):
    STABLE = "stable"
    UNSTABLE = "unstable"


class Status(str, Enum):
    VERIFIED = "verified"
    VIOLATED = "violated"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class Verdict:
    status: Status
    n: int | None = None
    side: Side | None = None
    witness: PlanePoint | None = None
    steps: int = 0
    notes: tuple[str, ...] = field(default=())

    def as_dict(self) -> dict:
        d = {"status": self.status.value, "steps": self.steps}
        if self.status is Status.VIOLATED:
            d.update(n=self.n, side=self.side.value, witness=self.witness.as_dict())
        if self.notes:
            d["notes"] = list(self.notes)
        return d


def _shift_closure(seqs) -> list[TailSeq]:
    seen: dict[TailSeq, None] = {}
    for s in seqs:
        while s not in seen:
            seen[s] = None
            s = s.drop(1)
    return list(seen)


class _EdgeMachine:
    """Iterates one edge: the driver ``d`` is dropped along one axis while
    ``rev(d[:n])`` is prepended to the two ``sources`` on the other axis."""

    def __init__(self, d: TailSeq, sources, drv_bounds, box_bounds):
        self.d = d
        self.sources = sources
        self.drv_lo, self.drv_hi = drv_bounds
        self.box_lo, self.box_hi = box_bounds
        self.targets = _shift_closure(box_bounds)
        self.index = {z: i for i, z in enumerate(self.targets)}
        self.next_of = [self.index[z.drop(1)] for z in self.targets]
        self.first = [z[0] for z in self.targets]
        # outcomes[s][t] = cmp(current image of source s, target t)
        self.outcomes = tuple(
            tuple(cmp_unimodal(src, z) for z in self.targets) for src in sources
        )
        self.n = 0
        self.seen: dict = {}

    def phase(self, n: int) -> int:
        p = len(self.d.pre)
        return n if n <= p else p + (n - p) % len(self.d.per)

    def advance(self) -> None:
        a = self.d[self.n]
        new = []
        for row in self.outcomes:
            out = []
            for t, z0 in enumerate(self.first):
                if a != z0:
                    out.append(Ordering.GT if a > z0 else Ordering.LT)
                else:
                    o = row[self.next_of[t]]
                    out.append(Ordering(-o) if a == "1" else o)
            new.append(tuple(out))
        self.outcomes = tuple(new)
        self.n += 1

    def state(self):
        return (self.phase(self.n), self.outcomes)

    def hits(self) -> bool:
        lo_i, hi_i = self.index[self.box_lo], self.index[self.box_hi]
        below_hi = any(row[hi_i] is Ordering.LT for row in self.outcomes)
        above_lo = any(row[lo_i] is Ordering.GT for row in self.outcomes)
        if not (below_hi and above_lo):
            return False
        moved = self.d.drop(self.n)
        return self.drv_lo < moved < self.drv_hi

    def images(self) -> tuple[TailSeq, list[TailSeq]]:
        head = self.d.prefix(self.n)[::-1]
        return self.d.drop(self.n), sorted(s.prepend(head) for s in self.sources)


def _overlap_points(lo: TailSeq, hi: TailSeq, box_lo: TailSeq, box_hi: TailSeq):
    """Candidate points of ``[lo, hi]`` strictly inside ``(box_lo, box_hi)``."""
    if box_lo < lo < box_hi:
        yield lo
    if box_lo < hi < box_hi:
        yield hi
    a = lo if box_lo < lo else box_lo
    b = hi if hi < box_hi else box_hi
    c = between(a, b)
    if c is not None:
        yield c


def _small_tailseqs(max_size: int):
    for size in range(1, max_size + 1):
        for per_len in range(1, size + 1):
            pre_len = size - per_len
            for bits in itertools.product("01", repeat=size):
                w = "".join(bits)
                yield TailSeq(w[:pre_len], w[pre_len:])


def _survives(p: PlanePoint, excluded: PruningRegion) -> bool:
    window = 2 * (len(p.forward) + len(p.backward)) + 16
    return all(
        region_contains(excluded, shift_point(p, k)) is None for k in range(-window, window + 1)
    )


def _witness(m: _EdgeMachine, side: Side, excluded, max_size: int) -> PlanePoint | None:
    moved, (lo, hi) = m.images()

    def point(c: TailSeq) -> PlanePoint:
        return PlanePoint(moved, c) if side is Side.STABLE else PlanePoint(c, moved)

    cands = list(_overlap_points(lo, hi, m.box_lo, m.box_hi))
    if excluded is None:
        return point(cands[0]) if cands else None
    seen = set()
    pool = itertools.chain(cands, _small_tailseqs(max_size))
    for c in pool:
        if c in seen or not (lo <= c <= hi and m.box_lo < c < m.box_hi):
            continue
        seen.add(c)
        if _survives(point(c), excluded):
            return point(c)
    return None


def verify_pruning_domain(
    r: Rectangle,
    excluded: PruningRegion | None = None,
    bound: int = DEFAULT_BOUND,
    witness_size: int = 8,
) -> Verdict:
    """Decide whether forward images of the stable edge and backward images
    of the unstable edges stay out of the open rectangle.

    With ``excluded``, an intersection only counts if it contains a point
    whose orbit avoids ``excluded`` (searched among short sequences); the
    answer is then a semi-decision, recorded in ``notes``.
    """
    if bound < 1:
        raise ValueError("bound must be positive")
    machines = [
        (Side.STABLE, _EdgeMachine(r.x_min, (r.y_min, r.y_max), (r.x_min, r.x_max), (r.y_min, r.y_max))),
        (Side.UNSTABLE, _EdgeMachine(r.y_min, (r.x_min, r.x_max), (r.y_min, r.y_max), (r.x_min, r.x_max))),
        (Side.UNSTABLE, _EdgeMachine(r.y_max, (r.x_min, r.x_max), (r.y_min, r.y_max), (r.x_min, r.x_max))),
    ]
    active = [True] * len(machines)
    notes: list[str] = []
    for n in range(1, bound + 1):
        for idx, (side, m) in enumerate(machines):
            if not active[idx]:
                continue
            m.advance()
            st = m.state()
            if st in m.seen:
                active[idx] = False
                continue
            m.seen[st] = n
            if m.hits():
                w = _witness(m, side, excluded, witness_size)
                if w is not None:
                    return Verdict(Status.VIOLATED, n, side, w, n, tuple(notes))
                notes.append(f"n={n} {side.value}: meets the interior, no bounded surviving witness")
        if not any(active):
            if excluded is not None:
                notes.append("relative to the excluded region: semi-decided")
            return Verdict(Status.VERIFIED, steps=n, notes=tuple(notes))
    return Verdict(Status.INCONCLUSIVE, steps=bound, notes=tuple(notes))
