"""Concatenated NBT decorations and their limiting points.

For a list of rationals the decoration is c_q1 0 c_q2 0 ... 0 c_qn.  Some
of the points C_i along the orbit are limiting; each one contributes a
rectangle reaching to its successor.  For [2/5, 2/7, 1/3] the limiting
points are C1 and C3, so two rectangles suffice.
"""
from fractions import Fraction

from hsforce import (
    PruningRegion,
    emit_svg,
    forced_periodic,
    limiting_structure,
    plist,
    plist_domains,
    region_plist,
    verify_pruning_domain,
)
from hsforce.report import RunConfig, report_points

qs = [Fraction(2, 5), Fraction(2, 7), Fraction(1, 3)]
pl = limiting_structure(qs)
print("codes:", ", ".join(pl.codes))
print("limiting:", sorted(pl.limiting), "successors:", pl.successor, "P-list:", pl.is_plist)

for d in plist_domains(qs):
    r = d.rectangle
    print(f"\nC{d.i} -> C{d.j}: block u = {d.block}")
    print(f"  unstable anchor {d.unstable_anchor}")
    print(f"  x in ({r.x_min}, {r.x_max}), y in ({r.y_min}, {r.y_max})")

region = region_plist(qs)
for i, r in enumerate(region):
    excluded = PruningRegion(region.rectangles[:i]) if i else None
    print(f"domain {i}: {verify_pruning_domain(r, excluded).status.value}")

rep = forced_periodic(plist(qs), 10)
print(f"\n{len(rep.forced)} forced and {len(rep.excluded)} excluded orbits up to period 10")

svg = emit_svg(region, report_points(rep), RunConfig("plot", max_period=10, depth=14))
with open("plist_example.svg", "w", encoding="utf-8") as fh:
    fh.write(svg)
print("wrote plist_example.svg")
