"""Independent brute-force reference: every comparison is done on plain
strings truncated to a fixed length, with no use of the library's comparison
or orbit code."""
from __future__ import annotations

from itertools import product

DEPTH = 200


def expand(pre: str, per: str, n: int = DEPTH) -> str:
    s = pre
    while len(s) < n:
        s += per
    return s[:n]


def cmp_trunc(a: str, b: str) -> int:
    ones = 0
    for x, y in zip(a, b):
        if x != y:
            up = 1 if x > y else -1
            return up if ones % 2 == 0 else -up
        ones += x == "1"
    return 0


def lyndon_brute(max_period: int) -> list[str]:
    """All primitive necklaces by brute force, each as its rotation that is
    largest under the truncated order."""
    out = []
    for n in range(1, max_period + 1):
        seen = set()
        for bits in product("01", repeat=n):
            w = "".join(bits)
            if any(w == w[:d] * (n // d) for d in range(1, n) if n % d == 0):
                continue
            rots = [w[i:] + w[:i] for i in range(n)]
            key = min(rots)
            if key in seen:
                continue
            seen.add(key)
            best = rots[0]
            for r in rots[1:]:
                if cmp_trunc(expand("", r), expand("", best)) > 0:
                    best = r
            out.append(best)
    return out


def _bounds(rect) -> tuple[str, str, str, str]:
    return tuple(expand(t.pre, t.per) for t in (rect.x_min, rect.x_max, rect.y_min, rect.y_max))


def forced_oracle(region, max_period: int) -> set[str]:
    rects = [_bounds(r) for r in region]
    forced = set()
    for code in lyndon_brute(max_period):
        n = len(code)
        hit = False
        for k in range(n):
            fwd = expand("", code[k:] + code[:k])
            back = expand("", (code[k:] + code[:k])[::-1])
            for x0, x1, y0, y1 in rects:
                if (
                    cmp_trunc(x0, fwd) < 0
                    and cmp_trunc(fwd, x1) < 0
                    and cmp_trunc(y0, back) < 0
                    and cmp_trunc(back, y1) < 0
                ):
                    hit = True
                    break
            if hit:
                break
        if not hit:
            forced.add(code)
    return forced


def first_stable_hit(x_min: str, y_lo: str, y_hi: str, box, max_n: int) -> int | None:
    """First n at which the forward image of the stable edge
    ``{x_min} x [y_lo, y_hi]`` meets the open box ``(x0, x1) x (y0, y1)``.

    The image is the vertical segment at ``x_min[n:]`` spanning
    ``rev(x_min[:n]) + y`` for ``y`` in the edge.  Strings are truncated."""
    x0, x1, y0, y1 = box
    for n in range(1, max_n + 1):
        x = x_min[n:]
        if not (cmp_trunc(x0, x) < 0 and cmp_trunc(x, x1) < 0):
            continue
        head = x_min[:n][::-1]
        a, b = head + y_lo, head + y_hi
        lo, hi = (a, b) if cmp_trunc(a, b) <= 0 else (b, a)
        # closed segment [lo, hi] meets the open interval (y0, y1)
        if cmp_trunc(lo, y1) < 0 and cmp_trunc(y0, hi) < 0:
            return n
    return None
