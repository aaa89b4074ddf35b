"""Maximal decorations and what the verifier says about their rectangles.

A decoration w is maximal when (w)^inf dominates all its shifts.  Its
rectangle is checked exactly: images of the stable and unstable edges are
tracked as a finite automaton until a state repeats.  The larger domain
used before shrinking is not a pruning domain, and the verifier finds the
iterate that re-enters it.
"""
from hsforce import (
    decoration,
    forced_periodic,
    forces_pair,
    is_shift_maximal,
    region_maximal,
    region_unshrunk_maximal,
    verify_pruning_domain,
)

for w in ["1", "11", "01", "1011", "100", "10110"]:
    print(f"{w:>6}: maximal={is_shift_maximal(w)}")

print()
for w in ["1", "11", "1011", "100"]:
    r = region_maximal(w)[0]
    v = verify_pruning_domain(r)
    print(f"w={w:<5} x_min={str(r.x_min):<10} y in ({r.y_min}, {r.y_max})  -> {v.status.value} in {v.steps} steps")

v = verify_pruning_domain(region_unshrunk_maximal("11")[0])
print(f"\nunshrunk domain for w=11: {v.status.value} at n={v.n} on the {v.side.value} side")
print(f"  witness point: {v.witness}")

print("\nforced counts at period <= 10")
for w in ["11", "1011", "111"]:
    print(f"  w={w:<5} {len(forced_periodic(decoration(w), 10).forced)}")
print("111 forces 11:", bool(forces_pair(decoration("111"), decoration("11"))))
